#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cllc/errors.hpp"

namespace cllc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients.
/// coeffs()[k] is the coefficient of z^k; the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(Int v);
    /// The monomial z^k.
    static IntPolynomial monomial(int k, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[k] : Int(0); }
    const Int& leading() const;

    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const Int& k, const IntPolynomial&);
    IntPolynomial operator-() const;

    bool operator==(const IntPolynomial&) const = default;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPolynomial derivative() const;

    /// Even/odd coefficient extraction: even_part()[k] = coeff(2k),
    /// odd_part()[k] = coeff(2k+1).
    IntPolynomial even_part() const;
    IntPolynomial odd_part() const;

    /// Sum of coefficients (value at 1).
    Int coefficient_sum() const;

    /// GCD of coefficient absolute values (0 for the zero polynomial).
    Int content() const;
    /// this / content, leading coefficient made positive.
    IntPolynomial primitive_part() const;

    /// Exact division by an integer; throws consistency_error if any
    /// coefficient is not divisible.
    IntPolynomial divide_exact(const Int& k) const;

    /// Exact polynomial division; throws consistency_error if the division
    /// leaves a remainder.
    IntPolynomial divide_exact(const IntPolynomial& d) const;

    /// Canonical text form "c0 + c1*z + c2*z^2", zero terms omitted,
    /// unit coefficients elided on nonconstant terms; "0" for zero.
    std::string to_string() const;

    /// Degree-indexed decimal strings, for JSON reports.
    std::vector<std::string> coeff_strings() const;

    /// Parses the canonical text form (and modest variations: optional
    /// whitespace, "z^k" terms in any order, leading '-').
    static IntPolynomial parse(const std::string& text);

private:
    void normalize();
    std::vector<Int> c_;
};

/// Pseudo-remainder of f by g, premultiplied so the result is an integer
/// polynomial equal to a positive constant times the true remainder.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive GCD via a pseudo-remainder sequence; result has positive
/// leading coefficient. gcd(0,0) is a usage error.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

} // namespace cllc
