#include "cllc/analysis.hpp"

#include <algorithm>

namespace cllc {

LogConcavityReport is_log_concave(const IntPolynomial& p) {
    if (p.is_zero()) throw usage_error("is_log_concave: zero polynomial");
    LogConcavityReport rep;
    const auto& a = p.coeffs();
    for (int k = 1; k + 1 < static_cast<int>(a.size()); ++k) {
        if (a[k] == 0) rep.contiguous_support = false;
        if (a[k] * a[k] < a[k - 1] * a[k + 1]) {
            rep.log_concave = false;
            if (rep.witness < 0) rep.witness = k;
        }
    }
    return rep;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw usage_error("squarefree_part: zero polynomial");
    if (p.degree() < 1) return IntPolynomial::constant(1);
    IntPolynomial g = gcd(p, p.derivative());
    return p.divide_exact(g).primitive_part();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw usage_error("squarefree_decomposition: zero polynomial");
    std::vector<IntPolynomial> factors;
    if (p.degree() < 1) return factors;
    // Yun's algorithm over the primitive part.
    IntPolynomial f = p.primitive_part();
    IntPolynomial g = gcd(f, f.derivative());
    IntPolynomial w = f.divide_exact(g);
    IntPolynomial y = f.derivative().divide_exact(g);
    while (w.degree() >= 1) {
        IntPolynomial z = y - w.derivative();
        if (z.is_zero()) {
            factors.push_back(w.primitive_part());
            break;
        }
        IntPolynomial fac = gcd(w, z);
        factors.push_back(fac.primitive_part());
        w = w.divide_exact(fac);
        y = z.divide_exact(fac);
    }
    return factors;
}

namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_at(const IntPolynomial& p, const std::optional<Rat>& x, bool minus_infinity) {
    if (p.is_zero()) return 0;
    if (!x) {
        int s = p.leading() > 0 ? 1 : -1;
        if (minus_infinity && p.degree() % 2 != 0) s = -s;
        return s;
    }
    return sign_of(p.eval(*x));
}

int sign_variations(const std::vector<IntPolynomial>& chain, const std::optional<Rat>& x,
                    bool minus_infinity) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, minus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    if (p.is_zero()) throw usage_error("sturm_chain: zero polynomial");
    std::vector<IntPolynomial> chain{p};
    if (p.degree() < 1) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() >= 1) {
        IntPolynomial r = -pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        // reduce by (positive) content to keep coefficients small
        Int c = r.content();
        chain.push_back(r.divide_exact(c));
    }
    return chain;
}

int sturm_real_root_count(const IntPolynomial& p, const std::optional<Rat>& a,
                          const std::optional<Rat>& b) {
    if (p.is_zero()) throw usage_error("sturm_real_root_count: zero polynomial");
    if (p.degree() < 1) return 0;
    if (p.degree() >= 1 && gcd(p, p.derivative()).degree() >= 1)
        throw usage_error("sturm_real_root_count: input is not squarefree");
    const auto chain = sturm_chain(p);
    return sign_variations(chain, a, true) - sign_variations(chain, b, false);
}

namespace {

// Counts roots in (a, b] using a prebuilt chain.
int count_in(const std::vector<IntPolynomial>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a, true) - sign_variations(chain, b, false);
}

void isolate(const IntPolynomial& q, const std::vector<IntPolynomial>& chain, const Rat& lo,
             const Rat& hi, int roots, std::vector<RatInterval>& out) {
    if (roots == 0) return;
    if (roots == 1) {
        if (q.degree() == 1) {
            out.push_back({Rat(-q.coeff(0), q.coeff(1)), Rat(-q.coeff(0), q.coeff(1))});
            return;
        }
        Rat a = lo, b = hi;
        // shrink to width <= 1, detecting exact rational hits on the way
        while (b - a > 1) {
            if (q.eval(b) == 0) {
                out.push_back({b, b});
                return;
            }
            Rat m = (a + b) / 2;
            if (q.eval(m) == 0) {
                out.push_back({m, m});
                return;
            }
            if (count_in(chain, a, m) == 1) b = m; else a = m;
        }
        if (q.eval(b) == 0) out.push_back({b, b});
        else out.push_back({a, b});
        return;
    }
    Rat m = (lo + hi) / 2;
    int left = count_in(chain, lo, m);
    isolate(q, chain, lo, m, left, out);
    isolate(q, chain, m, hi, roots - left, out);
}

} // namespace

RootCertificate certify_real_rooted(const IntPolynomial& p) {
    if (p.is_zero()) throw usage_error("certify_real_rooted: zero polynomial");
    RootCertificate cert;
    cert.polynomial = p;
    cert.squarefree = squarefree_part(p);
    cert.squarefree_degree = std::max(cert.squarefree.degree(), 0);
    if (cert.squarefree_degree == 0) {
        cert.real_rooted = true; // constant: vacuously real-rooted
        return cert;
    }
    const auto chain = sturm_chain(cert.squarefree);
    cert.distinct_real_roots = sign_variations(chain, std::nullopt, true) -
                               sign_variations(chain, std::nullopt, false);
    cert.real_rooted = (cert.distinct_real_roots == cert.squarefree_degree);

    // Cauchy bound: every root has |r| < 1 + max|a_i| / |a_lead|.
    Int max_abs = 0;
    for (const auto& c : cert.squarefree.coeffs()) {
        Int a = boost::multiprecision::abs(c);
        if (a > max_abs) max_abs = a;
    }
    Rat bound = 1 + Rat(max_abs, boost::multiprecision::abs(cert.squarefree.leading()));
    isolate(cert.squarefree, chain, -bound, bound, cert.distinct_real_roots,
            cert.isolating_intervals);
    return cert;
}

namespace {

// Multiplicity of the single root of `q_interval` seen through a squarefree
// factor chain, via root counting on the isolating interval.
bool factor_has_root_in(const IntPolynomial& factor, const RatInterval& iv) {
    if (factor.degree() < 1) return false;
    if (iv.is_point()) return factor.eval(iv.lo) == 0;
    return sturm_real_root_count(factor, iv.lo, iv.hi) == 1;
}

} // namespace

bool interlaces(const IntPolynomial& g, const IntPolynomial& f, bool strict) {
    if (g.is_zero() || f.is_zero()) throw usage_error("interlaces: zero polynomial");
    const auto cert_f = certify_real_rooted(f);
    const auto cert_g = certify_real_rooted(g);
    if (!cert_f.real_rooted || !cert_g.real_rooted)
        throw usage_error("interlaces: inputs must be real-rooted");

    const int s = f.degree();
    const int t = g.degree();
    if (s != t && s != t + 1) return false;
    if (t == 0) return true; // no g roots to constrain; s <= 1

    // Isolate the union of distinct roots once, via lcm of squarefree parts.
    IntPolynomial fs = cert_f.squarefree;
    IntPolynomial gs = cert_g.squarefree;
    IntPolynomial shared = gcd(fs, gs);
    IntPolynomial lcm = (fs * gs).divide_exact(shared).primitive_part();
    const auto cert_all = certify_real_rooted(lcm);
    const auto& roots = cert_all.isolating_intervals; // ascending, disjoint

    if (strict && shared.degree() >= 1) return false; // shared root breaks strictness

    const auto yun_f = squarefree_decomposition(f);
    const auto yun_g = squarefree_decomposition(g);
    auto multiplicity = [&](const std::vector<IntPolynomial>& yun, const RatInterval& iv) {
        int m = 0;
        for (std::size_t i = 0; i < yun.size(); ++i)
            if (factor_has_root_in(yun[i], iv)) m += static_cast<int>(i) + 1;
        return m;
    };

    // Roots as indices into the ascending distinct-root list, repeated by
    // multiplicity; index comparison is exact value comparison.
    std::vector<int> froots, groots;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        for (int m = multiplicity(yun_f, roots[r]); m > 0; --m) froots.push_back(static_cast<int>(r));
        for (int m = multiplicity(yun_g, roots[r]); m > 0; --m) groots.push_back(static_cast<int>(r));
    }
    if (static_cast<int>(froots.size()) != s || static_cast<int>(groots.size()) != t)
        throw consistency_error("interlaces: root multiplicities do not sum to the degree");

    auto le = [&](int a, int b) { return strict ? a < b : a <= b; };
    if (s == t) {
        // g1 <= f1 <= g2 <= f2 <= ... <= gt <= fs
        for (int i = 0; i < t; ++i) {
            if (!le(groots[i], froots[i])) return false;
            if (i + 1 < t && !le(froots[i], groots[i + 1])) return false;
        }
        return true;
    }
    // s == t + 1: f1 <= g1 <= f2 <= g2 <= ... <= gt <= fs
    for (int i = 0; i < t; ++i) {
        if (!le(froots[i], groots[i])) return false;
        if (!le(groots[i], froots[i + 1])) return false;
    }
    return true;
}

HermiteBiehlerReport hermite_biehler_check(const IntPolynomial& p, bool weak) {
    HermiteBiehlerReport rep;
    rep.even = p.even_part();
    rep.odd = p.odd_part();
    if (rep.even.is_zero() || rep.odd.is_zero())
        throw usage_error("hermite_biehler_check: even or odd part vanishes identically");

    auto nonpositive_roots = [&](const IntPolynomial& part, bool real_rooted) {
        if (!real_rooted) return false;
        // real-rooted with all nonzero coefficients of one sign forces
        // every root into (-inf, 0]; strict mode additionally excludes 0
        int sign = 0;
        for (const auto& c : part.coeffs()) {
            if (c == 0) continue;
            int s = c > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (s != sign) return false;
        }
        if (!weak && part.coeff(0) == 0) return false;
        return true;
    };

    rep.even_real_rooted = certify_real_rooted(rep.even).real_rooted;
    rep.odd_real_rooted = certify_real_rooted(rep.odd).real_rooted;
    rep.even_roots_nonpositive = nonpositive_roots(rep.even, rep.even_real_rooted);
    rep.odd_roots_nonpositive = nonpositive_roots(rep.odd, rep.odd_real_rooted);

    if (rep.even_real_rooted && rep.odd_real_rooted) {
        // Orient so the degree gap is 0 or 1; for stable polynomials the
        // lower-degree (odd) part weaves between the even part's roots.
        if (rep.even.degree() >= rep.odd.degree())
            rep.parts_interlace = interlaces(rep.odd, rep.even, !weak);
        else
            rep.parts_interlace = interlaces(rep.even, rep.odd, !weak);
    }
    return rep;
}

} // namespace cllc
