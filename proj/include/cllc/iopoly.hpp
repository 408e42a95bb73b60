#pragma once

#include <cstdint>
#include <string>

#include "cllc/partition.hpp"
#include "cllc/permutation.hpp"
#include "cllc/polynomial.hpp"

namespace cllc {

/// Largest n for which Q_n enumeration is allowed by default;
/// (12-1)! is about 4e7 cycle-count evaluations.
inline constexpr int kDefaultEnumGuard = 12;

struct EnumOptions {
    int threads = 1;
    int guard = kDefaultEnumGuard;
};

/// G_pi(z) = sum over zeta in Q_n of z^c(zeta pi), products left to right.
IntPolynomial g_poly(const Permutation& pi, const EnumOptions& opts = {});

/// F_pi(z) = sum over zeta in Q_n of z^floor((c(zeta pi) - 1) / 2).
IntPolynomial f_poly(const Permutation& pi, const EnumOptions& opts = {});

/// Exponent-halving map realizing F(z) = G(sqrt z) / (sqrt z)^(p+1):
/// the coefficient of z^k in G moves to z^((k - p - 1) / 2). Every nonzero
/// degree of G must satisfy k == p+1 (mod 2) and k >= p+1; a violation is a
/// consistency error (it would contradict the parity theorem).
IntPolynomial f_from_g(const IntPolynomial& g, int p);

/// F_lambda(z). With reduce, unit parts are stripped first and the result
/// is (n-1)(n-2)...(n-k) * F_mu for the unit-free residue mu (an all-units
/// partition reduces to [1], never to the empty one). The empty partition
/// yields the formal value 1.
IntPolynomial f_of_partition(const Partition& lambda, bool reduce = true,
                             const EnumOptions& opts = {});

struct TypeInvarianceReport {
    bool ok = true;
    int samples = 0;
    std::string detail;
};

/// Computes F for `samples` random conjugates of the canonical permutation
/// of type lambda and checks they all agree.
TypeInvarianceReport type_invariance_check(const Partition& lambda, int samples,
                                           std::uint64_t seed, const EnumOptions& opts = {});

/// Deterministic seed for randomized checks, derived from the partition.
std::uint64_t partition_seed(const Partition& lambda);

} // namespace cllc
