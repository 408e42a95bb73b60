#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cllc/errors.hpp"
#include "cllc/partition.hpp"

namespace cllc {

/// A permutation of {1..n} stored in one-line form. Letters are 1-based at
/// the API boundary; storage is 0-based. Immutable after construction.
class Permutation {
public:
    /// One-line form: images[i-1] = pi(i), values in {1..n}.
    explicit Permutation(const std::vector<int>& one_based_images);

    static Permutation identity(int n);

    /// Block-cyclic permutation of the given type: the first part acts
    /// cyclically on 1..p1, the next part on the following letters, etc.
    static Permutation canonical(const Partition& type);

    int n() const { return static_cast<int>(img_.size()); }

    /// pi(i), 1-based.
    int operator()(int i) const { return img_[i - 1] + 1; }

    Permutation inverse() const;

    /// Left-to-right product: result(i) = b(a(i)), apply a first.
    friend Permutation compose(const Permutation& a, const Permutation& b);

    /// sigma^{-1} * this * sigma (left-to-right), same cycle type.
    Permutation conjugate_by(const Permutation& sigma) const;

    int cycle_count() const;
    Partition cycle_type() const;

    /// Counts of odd-length and even-length cycles.
    std::pair<int, int> odd_even_cycle_counts() const;

    /// 1 for odd permutations, 0 for even: (n - cycle_count) mod 2.
    int parity() const { return (n() - cycle_count()) % 2; }

    /// Cycle notation, fixed points omitted; "()" for the identity.
    std::string to_cycle_string() const;

    /// One-line notation "[2,3,1]".
    std::string to_one_line_string() const;

    /// Accepts cycle notation "(1 2 3)(4 5)" (fixed points omissible, n
    /// inferred as the largest letter unless given) and one-line "[2,3,1]".
    static Permutation parse(const std::string& text, int n = 0);

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// 0-based images, img()[i] = pi(i+1) - 1.
    const std::vector<int>& img() const { return img_; }

private:
    explicit Permutation(std::vector<int> img0, int) : img_(std::move(img0)) {}
    std::vector<int> img_;
};

Permutation compose(const Permutation& a, const Permutation& b);

/// Uniformly random element of the conjugacy class of `type`, produced by
/// conjugating the canonical permutation with a uniform random permutation.
Permutation random_of_type(const Partition& type, std::mt19937_64& rng);

namespace detail {

// Streams the 0-based one-line images of every n-cycle whose cycle word
// starts with letter 1 and has `second` as its second letter, in
// lexicographic order of the remaining letters. Buffers are reused; the
// callback must not retain the reference.
template <class F>
void for_each_n_cycle_images_chunk(int n, int second, F&& fn) {
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (int v = 2; v <= n; ++v)
        if (v != second) rest.push_back(v);
    std::vector<int> img(n);
    do {
        // cycle word: 1, second, rest... ; img[w_i - 1] = w_{i+1 mod n}
        int prev = 1;
        auto link = [&](int next) { img[prev - 1] = next - 1; prev = next; };
        link(second);
        for (int v : rest) link(v);
        img[prev - 1] = 0; // close the cycle back to letter 1
        fn(const_cast<const std::vector<int>&>(img));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

template <class F>
void for_each_n_cycle_images(int n, F&& fn) {
    if (n == 1) {
        std::vector<int> img{0};
        fn(const_cast<const std::vector<int>&>(img));
        return;
    }
    for (int second = 2; second <= n; ++second)
        for_each_n_cycle_images_chunk(n, second, fn);
}

} // namespace detail

/// Streams Q_n, the (n-1)! n-cycles of S_n, in a fixed deterministic order.
/// Q_1 = {identity}.
template <class F>
void for_each_n_cycle(int n, F&& fn) {
    if (n < 1) throw usage_error("enumerate_n_cycles: n must be >= 1");
    detail::for_each_n_cycle_images(n, [&](const std::vector<int>& img0) {
        std::vector<int> one_based(img0.size());
        for (std::size_t i = 0; i < img0.size(); ++i) one_based[i] = img0[i] + 1;
        fn(Permutation(one_based));
    });
}

std::vector<Permutation> enumerate_n_cycles(int n);

} // namespace cllc
