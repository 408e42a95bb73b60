#include "cllc/polynomial.hpp"

#include <cctype>

namespace cllc {

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int v) {
    IntPolynomial p;
    p.c_.push_back(std::move(v));
    p.normalize();
    return p;
}

IntPolynomial IntPolynomial::monomial(int k, Int coeff) {
    IntPolynomial p;
    p.c_.assign(k + 1, Int(0));
    p.c_[k] = std::move(coeff);
    p.normalize();
    return p;
}

const Int& IntPolynomial::leading() const {
    if (c_.empty()) throw usage_error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.normalize();
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

IntPolynomial operator*(const Int& k, const IntPolynomial& p) {
    IntPolynomial r(p);
    for (auto& c : r.c_) c *= k;
    r.normalize();
    return r;
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    IntPolynomial r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(Int(k) * c_[k]);
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::even_part() const {
    IntPolynomial r;
    for (std::size_t k = 0; k < c_.size(); k += 2) r.c_.push_back(c_[k]);
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::odd_part() const {
    IntPolynomial r;
    for (std::size_t k = 1; k < c_.size(); k += 2) r.c_.push_back(c_[k]);
    r.normalize();
    return r;
}

Int IntPolynomial::coefficient_sum() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    IntPolynomial r(*this);
    for (auto& c : r.c_) c /= g;
    return r;
}

IntPolynomial IntPolynomial::divide_exact(const Int& k) const {
    if (k == 0) throw usage_error("division by zero");
    IntPolynomial r(*this);
    for (auto& c : r.c_) {
        if (c % k != 0)
            throw consistency_error("inexact integer division of polynomial coefficient " +
                                    c.str() + " by " + k.str());
        c /= k;
    }
    return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw usage_error("division by the zero polynomial");
    IntPolynomial rem(*this);
    IntPolynomial quot;
    if (degree() < d.degree()) {
        if (!is_zero()) throw consistency_error("inexact polynomial division");
        return {};
    }
    quot.c_.assign(degree() - d.degree() + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        if (rem.leading() % d.leading() != 0)
            throw consistency_error("inexact polynomial division");
        Int q = rem.leading() / d.leading();
        int shift = rem.degree() - d.degree();
        quot.c_[shift] = q;
        rem = rem - (IntPolynomial::monomial(shift, q) * d);
    }
    if (!rem.is_zero()) throw consistency_error("inexact polynomial division");
    quot.normalize();
    return quot;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Int a = c_[k];
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1) && k > 0;
        if (!unit) out += a.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::vector<Int> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto add_term = [&](const Int& coeff, int power) {
        if (coeffs.size() < static_cast<std::size_t>(power + 1))
            coeffs.resize(power + 1, Int(0));
        coeffs[power] += coeff;
    };
    skip_ws();
    if (i == text.size()) throw parse_error("empty polynomial", text, i);
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+')
                throw parse_error("unexpected leading '+'", text, i);
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", text, i);
        }
        first = false;
        Int coeff = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            coeff = Int(digits);
            saw_number = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int power = 0;
        if (i < text.size() && (text[i] == 'z' || text[i] == 'x')) {
            ++i;
            power = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw parse_error("expected exponent", text, i);
                long e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 100000) throw parse_error("exponent too large", text, i);
                    ++i;
                }
                power = static_cast<int>(e);
            }
        } else if (!saw_number) {
            throw parse_error("expected a coefficient or 'z'", text, i);
        }
        add_term(sign * coeff, power);
        skip_ws();
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw usage_error("pseudo_remainder: zero divisor");
    if (f.degree() < g.degree()) return f;
    const Int& lc = g.leading();
    int delta = f.degree() - g.degree() + 1;
    // one lc factor is applied per reduction step; pad to lc^delta at the end
    int applied = 0;
    std::vector<Int> r = f.coeffs();
    while (static_cast<int>(r.size()) - 1 >= g.degree() && !r.empty()) {
        int shift = static_cast<int>(r.size()) - 1 - g.degree();
        Int top = r.back();
        for (auto& c : r) c *= lc;
        for (int j = 0; j <= g.degree(); ++j)
            r[shift + j] -= top * g.coeffs()[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        ++applied;
    }
    IntPolynomial out(std::move(r));
    // pad with remaining lc factors so the multiplier is exactly lc^delta
    for (; applied < delta; ++applied) out = lc * out;
    // ensure the overall multiplier is positive (flip if lc^delta < 0)
    if (lc < 0 && (delta % 2) != 0) out = -out;
    return out;
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw usage_error("gcd(0,0) is undefined");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

} // namespace cllc
