#include <doctest.h>

#include <random>

#include "cllc/polynomial.hpp"

using namespace cllc;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    std::vector<Int> c(deg + 1);
    for (auto& v : c) v = static_cast<int>(rng() % 21) - 10;
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("basic arithmetic and normalization") {
    const IntPolynomial one_plus_z{1, 1};
    CHECK(one_plus_z + one_plus_z == IntPolynomial{2, 2});
    CHECK(Int(3) * one_plus_z == IntPolynomial{3, 3});
    CHECK(IntPolynomial{0, 1} * IntPolynomial{0, 1} == IntPolynomial{0, 0, 1});
    CHECK((one_plus_z - one_plus_z).is_zero());
    CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
    CHECK(IntPolynomial().degree() == -1);
}

TEST_CASE("even and odd parts") {
    const IntPolynomial p{1, 2, 3};
    CHECK(p.even_part() == IntPolynomial{1, 3});
    CHECK(p.odd_part() == IntPolynomial{2});
    CHECK(IntPolynomial{0, 1}.even_part().is_zero());
    CHECK(IntPolynomial{0, 1}.odd_part() == IntPolynomial{1});
    // z(z+1)(z+2)(z+3) = 6z + 11z^2 + 6z^3 + z^4
    const IntPolynomial s4{0, 6, 11, 6, 1};
    CHECK(s4.even_part() == IntPolynomial{0, 11, 1});
    CHECK(s4.odd_part() == IntPolynomial{6, 6});
}

TEST_CASE("derivative and gcd") {
    CHECK(IntPolynomial{1, 0, 1}.derivative() == IntPolynomial{0, 2});
    CHECK(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}) == IntPolynomial{-1, 1});
    CHECK(gcd(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1}) == IntPolynomial{1});
    CHECK_THROWS_AS(gcd(IntPolynomial{}, IntPolynomial{}), usage_error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, 6);
        const auto b = random_poly(rng, 6);
        const auto c = random_poly(rng, 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("p(z) == even(z^2) + z * odd(z^2)") {
    std::mt19937_64 rng(4);
    const IntPolynomial z_squared{0, 0, 1};
    auto substitute = [&](const IntPolynomial& p) {
        IntPolynomial acc;
        for (int k = p.degree(); k >= 0; --k)
            acc = acc * z_squared + IntPolynomial::constant(p.coeff(k));
        return acc;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_poly(rng, 8);
        CHECK(substitute(p.even_part()) + IntPolynomial{0, 1} * substitute(p.odd_part()) == p);
    }
}

TEST_CASE("gcd divides both arguments exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        auto a = random_poly(rng, 8);
        auto b = random_poly(rng, 8);
        if (a.is_zero() || b.is_zero()) continue;
        const auto g = gcd(a, b);
        // divide_exact throws if the division leaves a remainder
        CHECK(a.primitive_part().divide_exact(g) * g == a.primitive_part());
        CHECK(b.primitive_part().divide_exact(g) * g == b.primitive_part());
    }
}

TEST_CASE("exact divisions assert divisibility") {
    CHECK(IntPolynomial{2, 4}.divide_exact(Int(2)) == IntPolynomial{1, 2});
    CHECK_THROWS_AS((IntPolynomial{1, 2}).divide_exact(Int(2)), consistency_error);
    CHECK_THROWS_AS((IntPolynomial{1, 1}).divide_exact(IntPolynomial{0, 1}), consistency_error);
}

TEST_CASE("canonical text form and parsing") {
    CHECK(IntPolynomial{8, 15, 1}.to_string() == "8 + 15*z + z^2");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{0, -1, 2}.to_string() == "-z + 2*z^2");
    CHECK(IntPolynomial::parse("8+15*z+z^2") == IntPolynomial{8, 15, 1});
    CHECK(IntPolynomial::parse("z") == IntPolynomial{0, 1});
    CHECK(IntPolynomial::parse("3 - z") == IntPolynomial{3, -1});
    CHECK_THROWS_AS(IntPolynomial::parse(""), parse_error);
    CHECK_THROWS_AS(IntPolynomial::parse("2**z"), parse_error);
    CHECK_THROWS_AS(IntPolynomial::parse("z^"), parse_error);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 7);
        CHECK(IntPolynomial::parse(p.to_string()) == p);
    }
}

TEST_CASE("evaluation") {
    const IntPolynomial p{1, 2, 1}; // (1+z)^2
    CHECK(p.eval(Int(3)) == 16);
    CHECK(p.eval(Rat(-1)) == 0);
    CHECK(p.eval(Rat(1, 2)) == Rat(9, 4));
}
