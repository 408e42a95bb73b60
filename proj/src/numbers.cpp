#include "cllc/numbers.hpp"

#include "cllc/permutation.hpp"

namespace cllc {

void StirlingTable::ensure(int n) {
    if (static_cast<int>(rows_.size()) > n) return;
    if (rows_.empty()) rows_.push_back({Int(1)}); // row 0: s(0,0) = 1
    for (int m = static_cast<int>(rows_.size()); m <= n; ++m) {
        const auto& prev = rows_[m - 1];
        std::vector<Int> row(m + 1, Int(0));
        for (int k = 1; k <= m; ++k) {
            row[k] = prev[k - 1];
            if (k < m) row[k] += Int(m - 1) * prev[k];
        }
        rows_.push_back(std::move(row));
    }
}

const Int& StirlingTable::at(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw usage_error("stirling_first: need 0 <= k <= n");
    ensure(n);
    return rows_[n][k];
}

const std::vector<Int>& StirlingTable::row(int n) {
    if (n < 0) throw usage_error("stirling row: n must be >= 0");
    ensure(n);
    return rows_[n];
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {
StirlingTable& table() {
    thread_local StirlingTable t;
    return t;
}
} // namespace

Int stirling_first(int n, int k) { return table().at(n, k); }

IntPolynomial stirling_gf(int n) {
    if (n < 1) throw usage_error("stirling_gf: n must be >= 1");
    std::vector<Int> coeffs(table().row(n));
    return IntPolynomial(std::move(coeffs));
}

Int hultman(int n, int k) {
    if (n < 0 || k < 1 || k > n + 1) throw usage_error("hultman: need n >= 0 and 1 <= k <= n+1");
    if ((n - k) % 2 == 0) return 0;
    const Int num = stirling_first(n + 2, k);
    const Int den = binomial(n + 2, 2);
    if (num % den != 0)
        throw consistency_error("Hultman number not an integer: stirling(" +
                                std::to_string(n + 2) + "," + std::to_string(k) +
                                ") not divisible by " + den.str());
    return num / den;
}

Int hultman_brute(int n, int k) {
    if (n < 0) throw usage_error("hultman_brute: n must be >= 0");
    if (n > 11) throw usage_error("hultman_brute: n > 11 is too large to enumerate");
    const int m = n + 1;
    if (m == 0) return 0;
    // count zeta in Q_m with c(rho_m zeta) = k, product applied left to right
    const Permutation rho = Permutation::canonical(Partition(std::vector<int>{m}));
    std::vector<int> product(m);
    std::vector<char> visited(m);
    long long count = 0;
    detail::for_each_n_cycle_images(m, [&](const std::vector<int>& zeta) {
        for (int i = 0; i < m; ++i) product[i] = zeta[rho.img()[i]];
        std::fill(visited.begin(), visited.end(), 0);
        int cycles = 0;
        for (int i = 0; i < m; ++i) {
            if (visited[i]) continue;
            ++cycles;
            for (int j = i; !visited[j]; j = product[j]) visited[j] = 1;
        }
        if (cycles == k) ++count;
    });
    return count;
}

IntPolynomial f_cyclic_closed(int n) {
    if (n < 1) throw usage_error("f_cyclic_closed: n must be >= 1");
    std::vector<Int> coeffs(n / 2 + 1, Int(0));
    for (int k = 1; k <= n + 1; ++k) {
        if ((k - n) % 2 != 0) continue;
        coeffs[(k - 1) / 2] += stirling_first(n + 1, k);
    }
    return IntPolynomial(std::move(coeffs)).divide_exact(binomial(n + 1, 2));
}

IntPolynomial g_cyclic_closed(int n) {
    if (n < 1) throw usage_error("g_cyclic_closed: n must be >= 1");
    std::vector<Int> coeffs(n + 1, Int(0));
    for (int i = 0; n - 2 * i >= 1; ++i)
        coeffs[n - 2 * i] = stirling_first(n + 1, n - 2 * i);
    return IntPolynomial(std::move(coeffs)).divide_exact(binomial(n + 1, 2));
}

std::vector<IntPolynomial> f_cyclic_recurrence(int n_max) {
    if (n_max < 2) throw usage_error("f_cyclic_recurrence: n_max must be >= 2");
    std::vector<IntPolynomial> f(n_max + 1);
    f[0] = IntPolynomial::constant(1); // formal seed only
    f[1] = IntPolynomial::constant(1);
    f[2] = IntPolynomial::constant(1);
    for (int n = 2; n + 1 <= n_max; ++n) {
        IntPolynomial rhs = Int(2 * n + 1) * (IntPolynomial::monomial(evenness(n)) * f[n]) +
                            Int(n - 1) * (IntPolynomial{Int(n) * n, -1} * f[n - 1]);
        f[n + 1] = rhs.divide_exact(Int(n + 2));
    }
    return f;
}

RecurrenceCheckReport hultman_recurrence_check(int n_max) {
    if (n_max < 2) throw usage_error("hultman_recurrence_check: n_max must be >= 2");
    auto h = [](int g, int n) -> Int {
        if (n < 0) return 0;
        int k = n + 1 - 2 * g;
        if (k < 1 || k > n + 1) return 0;
        return hultman(n, k);
    };
    RecurrenceCheckReport rep;
    for (int n = 2; n <= n_max; ++n) {
        for (int g = 0; 2 * g <= n + 1; ++g) {
            Int lhs = Int(n + 2) * h(g, n);
            Int rhs = Int(2 * n + 1) * h(g, n - 1) - Int(n - 1) * h(g, n - 2) +
                      Int(n) * n * (n - 1) * h(g - 1, n - 2);
            if (lhs != rhs) {
                rep.ok = false;
                rep.first_n = n;
                rep.first_g = g;
                rep.detail = "first violation at n=" + std::to_string(n) +
                             ", g=" + std::to_string(g) + ": " + lhs.str() + " != " + rhs.str();
                return rep;
            }
        }
    }
    rep.detail = "recurrence holds for 2 <= n <= " + std::to_string(n_max);
    return rep;
}

} // namespace cllc
