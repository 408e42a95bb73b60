#include <doctest.h>

#include "cllc/numbers.hpp"

using namespace cllc;

namespace {
Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
} // namespace

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(5, 1) == 24);
    CHECK(stirling_first(7, 7) == 1);
    CHECK(stirling_first(6, 0) == 0);
    CHECK_THROWS_AS(stirling_first(3, 4), usage_error);

    for (int n = 0; n <= 20; ++n) {
        Int sum = 0;
        for (int k = 0; k <= n; ++k) sum += stirling_first(n, k);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("stirling generating function") {
    CHECK(stirling_gf(1) == IntPolynomial{0, 1});
    CHECK(stirling_gf(2) == IntPolynomial{0, 1, 1});
    CHECK(stirling_gf(4) == IntPolynomial{0, 6, 11, 6, 1});
    // product form agrees with the table row
    IntPolynomial prod{0, 1};
    for (int i = 1; i < 12; ++i) prod = prod * IntPolynomial{i, 1};
    CHECK(prod == stirling_gf(12));
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("hultman numbers: closed form") {
    CHECK(hultman(1, 2) == 1);
    CHECK(hultman(3, 2) == 5);
    CHECK(hultman(2, 2) == 0);
    CHECK_THROWS_AS(hultman(2, 4), usage_error);
}

TEST_CASE("hultman numbers: brute force") {
    CHECK(hultman_brute(1, 2) == 1);
    CHECK(hultman_brute(2, 1) == 1);
    CHECK(hultman_brute(2, 3) == 1);
    CHECK(hultman_brute(3, 4) == 1);
    CHECK_THROWS_AS(hultman_brute(12, 1), usage_error);
}

TEST_CASE("hultman closed form equals brute force") {
    // the acceptance suite extends this to n = 8
    for (int n = 0; n <= 6; ++n) {
        Int total = 0;
        for (int k = 1; k <= n + 1; ++k) {
            const Int brute = hultman_brute(n, k);
            CHECK(hultman(n, k) == brute);
            total += brute;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("closed forms for the single-cycle type") {
    CHECK(f_cyclic_closed(3) == IntPolynomial{1, 1});
    CHECK(f_cyclic_closed(4) == IntPolynomial{5, 1});
    CHECK(f_cyclic_closed(5) == IntPolynomial{8, 15, 1});
    CHECK(g_cyclic_closed(2) == IntPolynomial{0, 0, 1});
    CHECK(g_cyclic_closed(3) == IntPolynomial{0, 1, 0, 1});
    CHECK(g_cyclic_closed(4) == IntPolynomial{0, 0, 5, 0, 1});
}

TEST_CASE("three-term recurrence for F") {
    const auto seq = f_cyclic_recurrence(50);
    CHECK(seq[1] == IntPolynomial{1});
    CHECK(seq[2] == IntPolynomial{1});
    CHECK(seq[3] == IntPolynomial{1, 1});
    CHECK(seq[4] == IntPolynomial{5, 1});
    CHECK(seq[5] == IntPolynomial{8, 15, 1});
    for (int n = 1; n <= 50; ++n)
        CHECK(seq[n] == f_cyclic_closed(n));
}

TEST_CASE("hultman three-term recurrence") {
    CHECK(hultman_recurrence_check(2).ok);
    CHECK(hultman_recurrence_check(20).ok);
}

TEST_CASE("hultman h_g values used by the recurrence desk check") {
    // h_0(n) = H(n, n+1), the single-cycle counts
    CHECK(hultman(0, 1) == 1);
    CHECK(hultman(1, 2) == 1);
    CHECK(hultman(2, 3) == 1);
    CHECK(hultman(2, 1) == 1); // h_1(2)
}
