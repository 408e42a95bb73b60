#pragma once

#include <string>
#include <vector>

namespace cllc {

/// An integer partition: weakly decreasing positive parts summing to n.
/// The empty partition (n = 0) is representable; it only appears as the
/// formal residue of stripping fixed points.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    bool has_unit_parts() const { return !parts_.empty() && parts_.back() == 1; }

    /// Parts with all 1s removed (possibly empty).
    Partition without_unit_parts() const;

    /// Comma-separated canonical form, e.g. "3,1,1". Empty partition: "".
    std::string to_string() const;

    /// Parses "3,1,1" (whitespace tolerated). Throws parse_error on bad input.
    static Partition parse(const std::string& text);

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, [n] first,
/// [1,1,...,1] last. With no_unit_parts, only those whose smallest part
/// is at least 2.
std::vector<Partition> partitions(int n, bool no_unit_parts = false);

} // namespace cllc
