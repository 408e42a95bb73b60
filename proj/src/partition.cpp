#include "cllc/partition.hpp"

#include <cctype>
#include <numeric>

#include "cllc/errors.hpp"

namespace cllc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw usage_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw usage_error("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::without_unit_parts() const {
    std::vector<int> kept;
    for (int p : parts_)
        if (p >= 2) kept.push_back(p);
    return Partition(std::move(kept));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected a positive integer", text, i);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw parse_error("part too large", text, i);
            ++i;
        }
        if (v == 0) throw parse_error("parts must be positive", text, i - 1);
        parts.push_back(static_cast<int>(v));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw parse_error("expected ','", text, i);
            ++i;
            skip_ws();
            if (i == text.size()) throw parse_error("trailing ','", text, i);
        }
    }
    if (parts.empty()) throw parse_error("empty partition", text, 0);
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k] > parts[k - 1])
            throw parse_error("parts must be weakly decreasing", text, 0);
    return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n, bool no_unit_parts) {
    if (n < 1) throw usage_error("partitions: n must be >= 1");
    std::vector<Partition> out;
    // Reverse-lexicographic generation: repeatedly shrink the rightmost
    // part larger than 1 and redistribute the remainder greedily.
    std::vector<int> a;
    a.push_back(n);
    for (;;) {
        if (!no_unit_parts || a.back() >= 2)
            out.emplace_back(a);
        // find rightmost part > 1
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == 1) --i;
        if (i < 0) break;
        int rem = static_cast<int>(a.size()) - 1 - i; // count of trailing 1s
        int v = a[i] - 1;
        a.resize(i);
        int total = v + 1 + rem; // mass to redistribute
        while (total > 0) {
            int part = std::min(v, total);
            a.push_back(part);
            total -= part;
        }
    }
    return out;
}

} // namespace cllc
