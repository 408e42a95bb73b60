#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cllc/polynomial.hpp"

namespace cllc {

struct LogConcavityReport {
    bool log_concave = true;
    int witness = -1;            // first violating internal index, -1 if none
    bool contiguous_support = true; // no internal zero coefficients
};

/// Checks a_k^2 >= a_{k-1} a_{k+1} at every internal index of the
/// coefficient sequence. Zero polynomial is a usage error.
LogConcavityReport is_log_concave(const IntPolynomial& p);

/// A rational interval; lo == hi denotes an exact root at that point,
/// otherwise the root lies in the open-left half-open interval (lo, hi].
struct RatInterval {
    Rat lo;
    Rat hi;
    bool is_point() const { return lo == hi; }
};

struct RootCertificate {
    IntPolynomial polynomial;
    IntPolynomial squarefree;
    int squarefree_degree = 0;
    int distinct_real_roots = 0;
    bool real_rooted = false;
    std::vector<RatInterval> isolating_intervals; // disjoint, ascending
};

/// Sturm chain of a squarefree polynomial: p, p', then negated
/// pseudo-remainders (content-reduced).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Distinct real roots of a squarefree p in (a, b]; absent bounds mean
/// -infinity / +infinity. Non-squarefree input is a usage error.
int sturm_real_root_count(const IntPolynomial& p,
                          const std::optional<Rat>& a = std::nullopt,
                          const std::optional<Rat>& b = std::nullopt);

/// Exact real-rootedness certificate: real roots are counted on the
/// squarefree part and isolated by rational bisection inside the Cauchy
/// root bound. Degree <= 1 always certifies true.
RootCertificate certify_real_rooted(const IntPolynomial& p);

/// Whether the sorted real roots (with multiplicity) of g weave between
/// those of f: either deg f == deg g with g1 <= f1 <= g2 <= ... <= fs, or
/// deg f == deg g + 1 with f1 <= g1 <= f2 <= ... <= fs. With strict, all
/// inequalities must be strict. Both inputs must be real-rooted (usage
/// error otherwise); any other degree pattern returns false.
bool interlaces(const IntPolynomial& g, const IntPolynomial& f, bool strict);

struct HermiteBiehlerReport {
    IntPolynomial even, odd;
    bool even_real_rooted = false;
    bool odd_real_rooted = false;
    bool even_roots_nonpositive = false;
    bool odd_roots_nonpositive = false;
    bool parts_interlace = false;
    bool ok() const {
        return even_real_rooted && odd_real_rooted && even_roots_nonpositive &&
               odd_roots_nonpositive && parts_interlace;
    }
};

/// Verifies the stability certificate for P via its even and odd parts:
/// both real-rooted, roots nonpositive (weak) or negative (strict), and
/// the parts' roots interlacing. Requires even_part * odd_part not
/// identically zero.
HermiteBiehlerReport hermite_biehler_check(const IntPolynomial& p, bool weak = true);

/// p / gcd(p, p'), leading coefficient positive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Yun squarefree decomposition: returns factors f_i (some possibly
/// constant 1) with p = content * prod f_i^i and each f_i squarefree.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

} // namespace cllc
