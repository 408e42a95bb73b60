#include <doctest.h>

#include <random>
#include <set>

#include "cllc/permutation.hpp"

using namespace cllc;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
    return Permutation(img);
}

} // namespace

TEST_CASE("construction validates bijection") {
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), usage_error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), usage_error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), usage_error);
    CHECK(Permutation::identity(3)(2) == 2);
}

TEST_CASE("compose is left-to-right") {
    const auto c3 = Permutation::parse("(1 2 3)");
    CHECK(compose(c3, c3) == Permutation::parse("(1 3 2)"));
    const auto id = Permutation::identity(3);
    CHECK(compose(id, c3) == c3);
    const auto t = Permutation::parse("(1 2)");
    CHECK(compose(t, t) == Permutation::identity(2));
}

TEST_CASE("cycle statistics") {
    CHECK(Permutation::identity(5).cycle_count() == 5);
    const auto c3 = Permutation::parse("(1 2 3)");
    CHECK(compose(c3, c3).cycle_count() == 1);
    CHECK(compose(c3.inverse(), c3).cycle_count() == 3);

    CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
    CHECK(Permutation::parse("(1 2)(3 4)").cycle_type() == Partition({2, 2}));
    CHECK(Permutation::canonical(Partition({5})).cycle_type() == Partition({5}));

    CHECK(Permutation::identity(3).odd_even_cycle_counts() == std::pair{3, 0});
    CHECK(Permutation::parse("(1 2)(3 4)").odd_even_cycle_counts() == std::pair{0, 2});
    CHECK(Permutation::canonical(Partition({5})).odd_even_cycle_counts() == std::pair{1, 0});
}

TEST_CASE("parity") {
    CHECK(Permutation::identity(4).parity() == 0);
    CHECK(Permutation::parse("(1 2)", 4).parity() == 1);
    for (int n = 1; n <= 8; ++n)
        CHECK(Permutation::canonical(Partition({n})).parity() == (n + 1) % 2);
}

TEST_CASE("canonical permutation of a type") {
    CHECK(Permutation::canonical(Partition({3})) == Permutation::parse("(1 2 3)"));
    CHECK(Permutation::canonical(Partition({2, 2})) == Permutation::parse("(1 2)(3 4)"));
    CHECK(Permutation::canonical(Partition({2, 1, 1})) == Permutation::parse("(1 2)", 4));
}

TEST_CASE("n-cycle enumeration: counts, distinctness, type") {
    CHECK(enumerate_n_cycles(1) == std::vector{Permutation::identity(1)});
    CHECK(enumerate_n_cycles(2) == std::vector{Permutation::parse("(1 2)")});
    CHECK(enumerate_n_cycles(4).size() == 6);

    for (int n = 1; n <= 8; ++n) {
        const auto all = enumerate_n_cycles(n);
        std::size_t expected = 1;
        for (int i = 2; i < n; ++i) expected *= i;
        CHECK(all.size() == expected);
        std::set<Permutation> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& zeta : all)
            CHECK(zeta.cycle_type() == Partition({n}));
    }
}

TEST_CASE("fixed-point insertion partitions Q_n") {
    // inserting letter n at each position of every (n-1)-cycle word hits
    // every n-cycle exactly once
    for (int n = 3; n <= 7; ++n) {
        std::set<Permutation> built;
        for (const auto& zeta : enumerate_n_cycles(n - 1)) {
            // recover the cycle word starting at letter 1
            std::vector<int> word{1};
            for (int v = zeta(1); v != 1; v = zeta(v)) word.push_back(v);
            for (int j = 0; j < n - 1; ++j) {
                std::vector<int> extended(word.begin(), word.begin() + j + 1);
                extended.push_back(n);
                extended.insert(extended.end(), word.begin() + j + 1, word.end());
                std::vector<int> img(n);
                for (int i = 0; i < n; ++i)
                    img[extended[i] - 1] = extended[(i + 1) % n];
                auto [it, fresh] = built.insert(Permutation(img));
                CHECK(fresh);
            }
        }
        const auto qn = enumerate_n_cycles(n);
        CHECK(built == std::set<Permutation>(qn.begin(), qn.end()));
    }
}

TEST_CASE("associativity and the parity homomorphism on random permutations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto a = random_perm(n, rng);
        const auto b = random_perm(n, rng);
        const auto c = random_perm(n, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b).parity() == (a.parity() + b.parity()) % 2);
        const auto [o, e] = a.odd_even_cycle_counts();
        CHECK(o + e == a.cycle_count());
        CHECK(a.parity() % 2 == e % 2);
        CHECK(o % 2 == n % 2);
    }
}

TEST_CASE("random_of_type preserves the type") {
    std::mt19937_64 rng(11);
    for (const auto& type : {Partition({4, 2, 1}), Partition({3, 3}), Partition({2, 1, 1})})
        for (int trial = 0; trial < 20; ++trial)
            CHECK(random_of_type(type, rng).cycle_type() == type);
}

TEST_CASE("parser and printers") {
    const auto p = Permutation::parse("(1 2 3)(4 5)");
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
    CHECK(Permutation::parse("[2,3,1]") == Permutation::parse("(1 2 3)"));
    CHECK(Permutation::parse("(2 4)", 5).n() == 5);
    CHECK(Permutation::parse(p.to_one_line_string()) == p);
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    CHECK_THROWS_AS(Permutation::parse("(1 2"), parse_error);
    CHECK_THROWS_AS(Permutation::parse("(1 1)"), parse_error);
    CHECK_THROWS_AS(Permutation::parse("[2,2,1]"), usage_error);
}
