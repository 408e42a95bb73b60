#pragma once

#include <string>
#include <vector>

#include "cllc/polynomial.hpp"

namespace cllc {

/// Triangular table of signless Stirling numbers of the first kind,
/// grown on demand. Row n sums to n!.
class StirlingTable {
public:
    /// Entry (n, k): permutations of n letters with exactly k cycles.
    const Int& at(int n, int k);

    /// Full row n (index = k, size n+1).
    const std::vector<Int>& row(int n);

private:
    void ensure(int n);
    std::vector<std::vector<Int>> rows_;
};

Int binomial(int n, int k);

/// Signless Stirling number of the first kind, memoized per thread.
Int stirling_first(int n, int k);

/// The rising factorial z(z+1)...(z+n-1), whose coefficient at z^k is
/// stirling_first(n, k).
IntPolynomial stirling_gf(int n);

/// Hultman number H(n, k): zero when (n-k) is even, otherwise
/// stirling_first(n+2, k) / binomial(n+2, 2) with exact divisibility
/// asserted. Requires n >= 0 and 1 <= k <= n+1.
Int hultman(int n, int k);

/// Brute-force Hultman number: the count of (n+1)-cycles zeta with
/// cycle_count(rho_{n+1} zeta) == k, by enumeration of Q_{n+1}.
/// Guarded at n <= 11.
Int hultman_brute(int n, int k);

/// F_{n |- n}(z) via Stirling numbers: binomial(n+1,2) * F_n(z) =
/// sum over k == n (mod 2) of stirling_first(n+1, k) * z^floor((k-1)/2).
IntPolynomial f_cyclic_closed(int n);

/// G_{n |- n}(z) via Stirling numbers: binomial(n+1,2) * G_n(z) =
/// sum_i stirling_first(n+1, n-2i) * z^(n-2i).
IntPolynomial g_cyclic_closed(int n);

/// 1 if the integer is even, 0 if odd.
inline int evenness(int n) { return n % 2 == 0 ? 1 : 0; }

/// F_1..F_{n_max} by the three-term recurrence
///   (n+2) F_{n+1}(z) = (2n+1) z^evenness(n) F_n(z) + (n-1)(n^2 - z) F_{n-1}(z)
/// seeded F_1 = F_2 = 1. Index i of the returned vector holds F_i
/// (index 0 holds the formal seed 1). Every division is exact, asserted.
std::vector<IntPolynomial> f_cyclic_recurrence(int n_max);

struct RecurrenceCheckReport {
    bool ok = true;
    int first_n = -1;
    int first_g = -1;
    std::string detail;
};

/// Verifies the three-term Hultman recurrence
///   (n+2) h_g(n) = (2n+1) h_g(n-1) - (n-1) h_g(n-2) + n^2 (n-1) h_{g-1}(n-2)
/// with h_g(n) = H(n, n+1-2g), for 2 <= n <= n_max and all applicable g.
RecurrenceCheckReport hultman_recurrence_check(int n_max);

} // namespace cllc
