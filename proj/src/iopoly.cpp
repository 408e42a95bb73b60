#include "cllc/iopoly.hpp"

#include <atomic>
#include <thread>

namespace cllc {

namespace {

// Accumulates, over all zeta in Q_n, a histogram of c(zeta pi) indexed by
// cycle count. Chunks (fixed second letter of the cycle word) are evaluated
// independently and merged in chunk order, so the result does not depend on
// the thread count.
std::vector<Int> cycle_count_histogram(const Permutation& pi, const EnumOptions& opts) {
    const int n = pi.n();
    if (n > opts.guard)
        throw usage_error("enumeration of Q_" + std::to_string(n) +
                          " exceeds the guard (n <= " + std::to_string(opts.guard) + ")");

    auto run_chunk = [&pi, n](int second, std::vector<Int>& hist) {
        std::vector<int> product(n);
        std::vector<char> visited(n);
        std::vector<std::int64_t> counts(n + 1, 0);
        detail::for_each_n_cycle_images_chunk(n, second, [&](const std::vector<int>& zeta) {
            for (int i = 0; i < n; ++i) product[i] = pi.img()[zeta[i]];
            std::fill(visited.begin(), visited.end(), 0);
            int cycles = 0;
            for (int i = 0; i < n; ++i) {
                if (visited[i]) continue;
                ++cycles;
                for (int j = i; !visited[j]; j = product[j]) visited[j] = 1;
            }
            ++counts[cycles];
        });
        hist.assign(counts.begin(), counts.end());
    };

    if (n == 1) return {Int(0), Int(1)}; // Q_1 = {id}, c(id * pi) = c(pi) = 1

    const int chunks = n - 1;
    std::vector<std::vector<Int>> partial(chunks);
    const int workers = std::clamp(opts.threads, 1, chunks);
    if (workers == 1) {
        for (int c = 0; c < chunks; ++c) run_chunk(c + 2, partial[c]);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                    run_chunk(c + 2, partial[c]);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<Int> hist(n + 1, Int(0));
    for (const auto& part : partial)
        for (int k = 0; k <= n; ++k) hist[k] += part[k];
    return hist;
}

} // namespace

IntPolynomial g_poly(const Permutation& pi, const EnumOptions& opts) {
    return IntPolynomial(cycle_count_histogram(pi, opts));
}

IntPolynomial f_poly(const Permutation& pi, const EnumOptions& opts) {
    const auto hist = cycle_count_histogram(pi, opts);
    std::vector<Int> coeffs(pi.n() / 2 + 1, Int(0));
    for (int c = 1; c < static_cast<int>(hist.size()); ++c)
        coeffs[(c - 1) / 2] += hist[c];
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial f_from_g(const IntPolynomial& g, int p) {
    if (p != 0 && p != 1) throw usage_error("f_from_g: parity must be 0 or 1");
    if (g.is_zero()) return {};
    std::vector<Int> coeffs;
    for (int k = 0; k <= g.degree(); ++k) {
        if (g.coeff(k) == 0) continue;
        if (k < p + 1 || (k - p - 1) % 2 != 0)
            throw consistency_error("f_from_g: degree " + std::to_string(k) +
                                    " violates the parity theorem for p=" + std::to_string(p));
        int target = (k - p - 1) / 2;
        if (static_cast<int>(coeffs.size()) <= target) coeffs.resize(target + 1, Int(0));
        coeffs[target] = g.coeff(k);
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial f_of_partition(const Partition& lambda, bool reduce, const EnumOptions& opts) {
    if (lambda.empty()) return IntPolynomial::constant(1); // formal convention
    if (!reduce || !lambda.has_unit_parts())
        return f_poly(Permutation::canonical(lambda), opts);

    Partition mu = lambda.without_unit_parts();
    if (mu.empty()) mu = Partition(std::vector<int>{1}); // all-units case keeps one letter
    const int n = lambda.n();
    Int multiplier = 1;
    for (int j = 1; j <= n - mu.n(); ++j) multiplier *= n - j;
    return multiplier * f_poly(Permutation::canonical(mu), opts);
}

TypeInvarianceReport type_invariance_check(const Partition& lambda, int samples,
                                           std::uint64_t seed, const EnumOptions& opts) {
    if (lambda.n() < 1) throw usage_error("type_invariance_check: empty partition");
    TypeInvarianceReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    const IntPolynomial reference = f_poly(Permutation::canonical(lambda), opts);
    for (int s = 0; s < samples; ++s) {
        const Permutation pi = random_of_type(lambda, rng);
        if (f_poly(pi, opts) != reference) {
            rep.ok = false;
            rep.detail = "F differs for conjugate " + pi.to_cycle_string();
            return rep;
        }
    }
    rep.detail = "all conjugates agree";
    return rep;
}

std::uint64_t partition_seed(const Partition& lambda) {
    // FNV-1a over the parts; stable across runs and platforms.
    std::uint64_t h = 1469598103934665603ull;
    for (int part : lambda.parts()) {
        h ^= static_cast<std::uint64_t>(part);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace cllc
