#include <doctest.h>

#include "cllc/analysis.hpp"
#include "cllc/numbers.hpp"

using namespace cllc;

TEST_CASE("log-concavity") {
    CHECK(is_log_concave(IntPolynomial{1, 2, 1}).log_concave);
    const auto bad = is_log_concave(IntPolynomial{1, 1, 2});
    CHECK_FALSE(bad.log_concave);
    CHECK(bad.witness == 1);
    CHECK(is_log_concave(IntPolynomial{8, 15, 1}).log_concave);
    CHECK_FALSE(is_log_concave(IntPolynomial{1, 0, 1}).contiguous_support);
    CHECK_THROWS_AS(is_log_concave(IntPolynomial{}), usage_error);
}

TEST_CASE("sturm root counting") {
    CHECK(sturm_real_root_count(IntPolynomial{1, 0, 1}) == 0);
    CHECK(sturm_real_root_count(IntPolynomial{-1, 0, 1}) == 2);
    CHECK(sturm_real_root_count(IntPolynomial{8, 15, 1}, std::nullopt, Rat(0)) == 2);
    CHECK(sturm_real_root_count(IntPolynomial{-1, 0, 1}, Rat(0), std::nullopt) == 1);
    CHECK(sturm_real_root_count(IntPolynomial{-1, 0, 1}, Rat(-1), Rat(1)) == 1); // (a,b] excludes -1
    CHECK(sturm_real_root_count(IntPolynomial{-1, 0, 1}, Rat(-2), Rat(1)) == 2);
    CHECK_THROWS_AS(sturm_real_root_count(IntPolynomial{1, 2, 1}), usage_error);

    // falling factorial products: n distinct roots 0, -1, ..., 1-n
    for (int n = 1; n <= 12; ++n)
        CHECK(sturm_real_root_count(stirling_gf(n)) == n);
}

TEST_CASE("real-rootedness certificates") {
    const auto linear = certify_real_rooted(IntPolynomial{5, 1});
    CHECK(linear.real_rooted);
    REQUIRE(linear.isolating_intervals.size() == 1);
    CHECK(linear.isolating_intervals[0].is_point());
    CHECK(linear.isolating_intervals[0].lo == Rat(-5));

    CHECK_FALSE(certify_real_rooted(IntPolynomial{1, 0, 1}).real_rooted);
    CHECK(certify_real_rooted(IntPolynomial{7}).real_rooted); // constant, vacuous

    const auto f9 = certify_real_rooted(f_cyclic_closed(9));
    CHECK(f9.real_rooted);
    CHECK(f9.distinct_real_roots == f9.squarefree_degree);

    // multiple roots collapse onto the squarefree part
    const auto sq = certify_real_rooted(IntPolynomial{1, 2, 1});
    CHECK(sq.real_rooted);
    CHECK(sq.squarefree_degree == 1);
    CHECK(sq.distinct_real_roots == 1);

    // intervals are sorted, disjoint, and each isolates one root
    const auto s6 = certify_real_rooted(stirling_gf(6));
    REQUIRE(s6.isolating_intervals.size() == 6);
    for (std::size_t i = 1; i < s6.isolating_intervals.size(); ++i)
        CHECK(s6.isolating_intervals[i - 1].hi <= s6.isolating_intervals[i].lo);
}

TEST_CASE("squarefree decomposition") {
    // (z+1)^2 (z+3)
    const IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{3, 1};
    const auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == IntPolynomial{3, 1});
    CHECK(factors[1] == IntPolynomial{1, 1});
    CHECK(squarefree_part(p) == IntPolynomial{3, 1} * IntPolynomial{1, 1});
}

TEST_CASE("interlacing") {
    const IntPolynomial z1{1, 1}, z2{2, 1}, z3{3, 1}, z5{5, 1};
    CHECK(interlaces(z2, z1 * z3, false));
    CHECK(interlaces(z2, z1 * z3, true));
    CHECK_FALSE(interlaces(z5, z1 * z2, false));

    // shared root: weak holds, strict does not
    CHECK(interlaces(z1, z1 * z2, false));
    CHECK_FALSE(interlaces(z1, z1 * z2, true));

    // equal degrees
    CHECK(interlaces(z2 * IntPolynomial{4, 1}, z1 * z3, false));
    CHECK_FALSE(interlaces(z1 * z3, z2 * IntPolynomial{4, 1}, false));

    // degree gap over 1: pattern impossible
    CHECK_FALSE(interlaces(z1, z2 * z3 * z5, false));

    CHECK_THROWS_AS(interlaces(IntPolynomial{1, 0, 1}, z1, false), usage_error);
}

TEST_CASE("interlacing consecutive F polynomials") {
    // consecutive members of the recurrence behave like a Sturm sequence:
    // with equal degrees the newer polynomial's roots weave below, with a
    // degree step the older one weaves inside
    for (int n = 2; n <= 20; ++n) {
        const auto older = f_cyclic_closed(n);
        const auto newer = f_cyclic_closed(n + 1);
        if (older.degree() == newer.degree())
            CHECK(interlaces(newer, older, false));
        else
            CHECK(interlaces(older, newer, false));
    }
}

TEST_CASE("hermite-biehler stability check") {
    // S_5 = z(z+1)(z+2)(z+3)(z+4): weakly stable by construction
    const auto s5 = hermite_biehler_check(stirling_gf(5), true);
    CHECK(s5.ok());

    const auto p = hermite_biehler_check(IntPolynomial{2, 3, 1}, true);
    CHECK(p.even == IntPolynomial{2, 1});
    CHECK(p.odd == IntPolynomial{3});
    CHECK(p.ok());

    CHECK_THROWS_AS(hermite_biehler_check(IntPolynomial{1, 0, 1}, true), usage_error);

    // strictly stable example: (z+1)(z+2) has negative roots
    CHECK(hermite_biehler_check(IntPolynomial{2, 3, 1}, false).ok());
    // S_5 has a root at zero: weak passes, strict does not
    CHECK_FALSE(hermite_biehler_check(stirling_gf(5), false).ok());
}

TEST_CASE("real-rooted implies log-concave for nonnegative coefficients") {
    for (int n = 2; n <= 20; ++n) {
        const auto f = f_cyclic_closed(n);
        if (certify_real_rooted(f).real_rooted)
            CHECK(is_log_concave(f).log_concave);
    }
}
