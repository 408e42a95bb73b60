#pragma once

#include <stdexcept>
#include <string>

namespace cllc {

// Exit-code policy: 0 ok, 1 conjecture counterexample, 2 usage error,
// 3 internal consistency error (a known identity failed).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistency = 3;

// Bad input: malformed strings, out-of-range arguments, violated preconditions.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity that must hold by theorem failed. This can only mean a
// transcription bug, so it is distinct from a conjecture counterexample.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with the offending position, for caret-annotated diagnostics.
class parse_error : public usage_error {
public:
    parse_error(const std::string& what, std::string input, std::size_t pos)
        : usage_error(what), input_(std::move(input)), pos_(pos) {}

    const std::string& input() const { return input_; }
    std::size_t position() const { return pos_; }

private:
    std::string input_;
    std::size_t pos_;
};

} // namespace cllc
