#include "cllc/scanner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cllc/numbers.hpp"

namespace cllc {

namespace {

using ordered_json = nlohmann::ordered_json;

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Cost ceiling for the cross-checks that re-enumerate Q_n directly at the
// full (unreduced) size.
constexpr int kDirectCheckMaxN = 9;

struct Cache {
    std::map<std::string, std::vector<std::string>> coeffs;

    static Cache load(const std::string& path) {
        Cache cache;
        std::ifstream in(path);
        if (!in) return cache;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object()) continue;
            if (j.value("version", "") != kToolVersion) continue; // stale entry
            if (!j.contains("partition") || !j.contains("coeffs")) continue;
            cache.coeffs[j["partition"].get<std::string>()] =
                j["coeffs"].get<std::vector<std::string>>();
        }
        return cache;
    }

    static void store(const std::string& path, const std::vector<ScanRecord>& records) {
        std::ofstream out(path);
        for (const auto& rec : records) {
            ordered_json j;
            j["version"] = kToolVersion;
            j["partition"] = rec.partition.to_string();
            j["coeffs"] = rec.f.coeff_strings();
            out << j.dump() << "\n";
        }
    }
};

ScanRecord scan_one(const Partition& lambda, const ScanOptions& opts,
                    const std::vector<std::string>* cached_coeffs) {
    const auto start = std::chrono::steady_clock::now();
    ScanRecord rec;
    rec.partition = lambda;
    const int n = lambda.n();
    const EnumOptions enum_opts{1, opts.guard};

    Partition mu = lambda;
    if (opts.reduce && lambda.has_unit_parts()) {
        mu = lambda.without_unit_parts();
        if (mu.empty()) mu = Partition(std::vector<int>{1});
        rec.reduced_from = mu;
    }

    bool from_cache = false;
    if (cached_coeffs) {
        std::vector<Int> coeffs;
        coeffs.reserve(cached_coeffs->size());
        for (const auto& s : *cached_coeffs) coeffs.emplace_back(s);
        rec.f = IntPolynomial(std::move(coeffs));
        from_cache = true;
    } else {
        rec.f = f_of_partition(lambda, opts.reduce, enum_opts);
    }

    const auto lc = is_log_concave(rec.f);
    rec.log_concave = lc.log_concave;
    rec.contiguous_support = lc.contiguous_support;
    rec.real_rooted = certify_real_rooted(rec.f).real_rooted;

    rec.cross_checks["mass"] = (rec.f.coefficient_sum() == factorial(n - 1));
    if (lambda.parts().size() == 1)
        rec.cross_checks["closed_form"] = (f_cyclic_closed(n) == rec.f);

    if (!from_cache) {
        // enumeration-backed checks run on the permutation actually enumerated
        const Permutation pi = Permutation::canonical(mu);
        rec.cross_checks["fg_bridge"] =
            (f_from_g(g_poly(pi, enum_opts), pi.parity()) == f_poly(pi, enum_opts));
        if (n <= kDirectCheckMaxN) {
            rec.cross_checks["type_invariance"] =
                type_invariance_check(lambda, opts.invariance_samples,
                                      partition_seed(lambda), enum_opts).ok;
            if (rec.reduced_from)
                rec.cross_checks["reduction"] =
                    (f_of_partition(lambda, false, enum_opts) == rec.f);
        }
    } else {
        rec.cross_checks["cached"] = true;
    }

    if (opts.timing) {
        const auto stop = std::chrono::steady_clock::now();
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    }
    return rec;
}

} // namespace

bool ScanRecord::all_checks_pass() const {
    for (const auto& [name, ok] : cross_checks)
        if (!ok) return false;
    return true;
}

std::vector<ScanRecord> scan(int n_min, int n_max, const ScanOptions& opts) {
    if (n_min < 1 || n_max < n_min) throw usage_error("scan: need 1 <= n_min <= n_max");

    std::vector<Partition> work;
    for (int n = n_min; n <= n_max; ++n)
        for (auto& lambda : partitions(n)) work.push_back(std::move(lambda));

    // Guard check up front so failures are usage errors, not mid-scan aborts.
    for (const auto& lambda : work) {
        Partition mu = opts.reduce ? lambda.without_unit_parts() : lambda;
        int effective = opts.reduce ? std::max(mu.n(), 1) : lambda.n();
        if (effective > opts.guard)
            throw usage_error("scan: partition " + lambda.to_string() +
                              " needs enumeration of Q_" + std::to_string(effective) +
                              ", over the guard " + std::to_string(opts.guard));
    }

    Cache cache;
    if (!opts.cache_path.empty()) cache = Cache::load(opts.cache_path);

    std::vector<ScanRecord> records(work.size());
    auto compute = [&](std::size_t i) {
        const std::vector<std::string>* cached = nullptr;
        if (auto it = cache.coeffs.find(work[i].to_string()); it != cache.coeffs.end())
            cached = &it->second;
        records[i] = scan_one(work[i], opts, cached);
    };

    const int workers = std::clamp(opts.threads, 1, static_cast<int>(work.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < work.size(); ++i) compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1))
                    compute(i);
            });
        for (auto& t : pool) t.join();
    }

    if (!opts.cache_path.empty()) Cache::store(opts.cache_path, records);
    return records;
}

std::string to_json_lines(const std::vector<ScanRecord>& records) {
    std::string out;
    for (const auto& rec : records) {
        ordered_json j;
        j["n"] = rec.partition.n();
        j["partition"] = rec.partition.parts();
        j["coeffs"] = rec.f.coeff_strings();
        j["lc"] = rec.log_concave;
        j["contiguous"] = rec.contiguous_support;
        j["rr"] = rec.real_rooted;
        ordered_json checks = ordered_json::object();
        for (const auto& [name, ok] : rec.cross_checks) checks[name] = ok;
        j["checks"] = checks;
        j["ms"] = rec.elapsed_ms;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string to_table(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "n   partition        lc  rr  checks  ms      F\n";
    for (const auto& rec : records) {
        std::string part = rec.partition.to_string();
        out << rec.partition.n() << std::string(rec.partition.n() < 10 ? 3 : 2, ' ')
            << part << std::string(part.size() < 16 ? 17 - part.size() : 1, ' ')
            << (rec.log_concave ? "y" : "N") << "   " << (rec.real_rooted ? "y" : "N") << "   "
            << (rec.all_checks_pass() ? "ok" : "FAIL") << "      " << rec.elapsed_ms
            << "\t" << rec.f.to_string() << "\n";
    }
    return out.str();
}

bool IdentityReport::all_ok() const {
    for (const auto& r : results)
        if (!r.as_expected()) return false;
    return true;
}

std::string IdentityReport::to_string() const {
    std::string out;
    for (const auto& r : results) {
        out += r.as_expected() ? "PASS " : "FAIL ";
        out += r.name;
        if (r.expected_fail) out += " (control: must fail, and does)";
        if (!r.detail.empty()) out += ": " + r.detail;
        out += "\n";
    }
    return out;
}

IdentityReport verify_identities(int n_max) {
    if (n_max < 2) throw usage_error("verify_identities: n_max must be >= 2");
    const int enum_cap = std::min(n_max, 9);
    IdentityReport rep;
    auto add = [&](std::string name, bool pass, std::string detail, bool expected_fail = false) {
        rep.results.push_back({std::move(name), pass, expected_fail, std::move(detail)});
    };

    {
        // stripping one fixed point multiplies F by the enlarged size minus one
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= std::min(enum_cap - 1, 7) && ok; ++m) {
            for (const auto& mu : partitions(m)) {
                std::vector<int> parts = mu.parts();
                parts.push_back(1);
                const Partition extended{std::move(parts)};
                if (f_of_partition(extended, false) != Int(m) * f_of_partition(mu, false)) {
                    ok = false;
                    detail = "fails for " + extended.to_string();
                    break;
                }
            }
        }
        add("fixed_point_reduction", ok, ok ? "all partitions up to 7+1 letters" : detail);
    }

    {
        // c(zeta pi) and p(pi) have opposite parities; F is G with exponents halved
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= std::min(enum_cap, 8) && ok; ++n) {
            std::mt19937_64 rng(0x5eed0000 + n);
            for (int s = 0; s < 5 && ok; ++s) {
                Permutation pi = Permutation::canonical(Partition(std::vector<int>{n}));
                if (s > 0) { // uniform random pi
                    std::vector<int> img(n);
                    for (int i = 0; i < n; ++i) img[i] = i + 1;
                    for (int i = n - 1; i > 0; --i)
                        std::swap(img[i], img[rng() % (i + 1)]);
                    pi = Permutation(img);
                }
                const int p = pi.parity();
                bool parity_ok = true;
                for_each_n_cycle(n, [&](const Permutation& zeta) {
                    if ((compose(zeta, pi).cycle_count() + p) % 2 == 0) parity_ok = false;
                });
                if (!parity_ok || f_from_g(g_poly(pi), p) != f_poly(pi)) {
                    ok = false;
                    detail = "fails for pi = " + pi.to_cycle_string();
                }
            }
        }
        add("parity_bridge", ok, ok ? "exhaustive over Q_n, n <= 8, random pi" : detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= enum_cap && ok; ++n) {
            const Permutation rho = Permutation::canonical(Partition(std::vector<int>{n}));
            if (f_cyclic_closed(n) != f_poly(rho)) { ok = false; detail = "F, n=" + std::to_string(n); }
            else if (g_cyclic_closed(n) != g_poly(rho)) { ok = false; detail = "G, n=" + std::to_string(n); }
        }
        add("cyclic_closed_vs_enumeration", ok,
            ok ? "F and G closed forms match enumeration up to n=" + std::to_string(enum_cap) : detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= std::min(enum_cap - 1, 8) && ok; ++n) {
            Int total = 0;
            for (int k = 1; k <= n + 1; ++k) {
                const Int brute = hultman_brute(n, k);
                total += brute;
                if (hultman(n, k) != brute) {
                    ok = false;
                    detail = "H(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    break;
                }
            }
            if (ok && total != factorial(n)) {
                ok = false;
                detail = "mass at n=" + std::to_string(n);
            }
        }
        add("hultman_scaled_stirling_vs_brute", ok,
            ok ? "scaled-Stirling form matches enumeration, all k" : detail);
    }

    {
        const int cap = std::max(n_max, 30);
        const auto seq = f_cyclic_recurrence(cap);
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= cap; ++n)
            if (seq[n] != f_cyclic_closed(n)) {
                ok = false;
                detail = "n=" + std::to_string(n);
                break;
            }
        add("recurrence_shifted_vs_closed", ok,
            ok ? "three-term recurrence matches closed form up to n=" + std::to_string(cap) : detail);
    }

    {
        // Control: the same recurrence without the index shift must fail.
        // At n=3: lhs = 5*F_3 = 5+5z, rhs = 7*F_2 + 2*(9-z)*F_1 = 25-2z.
        const IntPolynomial lhs = Int(5) * f_cyclic_closed(3);
        const IntPolynomial rhs =
            Int(7) * (IntPolynomial::monomial(evenness(3)) * f_cyclic_closed(2)) +
            Int(2) * (IntPolynomial{9, -1} * f_cyclic_closed(1));
        add("recurrence_unshifted", lhs == rhs,
            "n=3: lhs " + lhs.to_string() + " vs rhs " + rhs.to_string(),
            /*expected_fail=*/true);
    }

    {
        const auto r = hultman_recurrence_check(std::max(n_max, 20));
        add("hultman_three_term_recurrence", r.ok, r.detail);
    }

    return rep;
}

} // namespace cllc
