// Command-line front end: computes IO-polynomials of permutation types,
// Stirling and Hultman numbers, certifies log-concavity / real-rootedness,
// and drives the conjecture scan.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cllc/analysis.hpp"
#include "cllc/iopoly.hpp"
#include "cllc/numbers.hpp"
#include "cllc/scanner.hpp"

namespace {

using cllc::Int;
using cllc::IntPolynomial;
using ordered_json = nlohmann::ordered_json;

int env_threads(int cli_threads) {
    if (const char* env = std::getenv("CLLC_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (...) {
            throw cllc::usage_error("CLLC_THREADS must be a positive integer");
        }
    }
    return cli_threads;
}

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json j;
    j["text"] = p.to_string();
    j["coeffs"] = p.coeff_strings();
    return j;
}

ordered_json certificate_json(const cllc::RootCertificate& cert) {
    ordered_json j;
    j["squarefree_degree"] = cert.squarefree_degree;
    j["distinct_real_roots"] = cert.distinct_real_roots;
    j["real_rooted"] = cert.real_rooted;
    ordered_json intervals = ordered_json::array();
    for (const auto& iv : cert.isolating_intervals) {
        ordered_json e;
        e["lo"] = iv.lo.str();
        e["hi"] = iv.hi.str();
        e["point"] = iv.is_point();
        intervals.push_back(e);
    }
    j["isolating_intervals"] = intervals;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact IO-polynomial computation and log-concavity / real-rootedness certification"};
    app.require_subcommand(1);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Sweep all partitions of n in [min,max] and certify each F");
    int scan_min = 1, scan_max = 8, scan_threads = 1, scan_guard = cllc::kDefaultEnumGuard;
    bool scan_no_reduce = false, scan_no_timing = false;
    std::string scan_format = "table", scan_out, scan_cache;
    scan_cmd->add_option("--min", scan_min, "Smallest n")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--max", scan_max, "Largest n")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--threads,-t", scan_threads, "Worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--guard", scan_guard, "Enumeration guard on n");
    scan_cmd->add_flag("--no-reduce", scan_no_reduce, "Enumerate directly, skip fixed-point stripping");
    scan_cmd->add_flag("--no-timing", scan_no_timing, "Report ms as 0 for byte-reproducible output");
    scan_cmd->add_option("--format", scan_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    scan_cmd->add_option("--out", scan_out, "Write the report to a file instead of stdout");
    scan_cmd->add_option("--cache", scan_cache, "JSON-lines coefficient cache file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-identity suite");
    int verify_max = 8;
    verify_cmd->add_option("--max", verify_max, "Enumeration scale")->check(CLI::PositiveNumber);

    // fpoly
    auto* fpoly_cmd = app.add_subcommand("fpoly", "F for a partition type");
    std::string fpoly_partition;
    bool fpoly_no_reduce = false, fpoly_json = false;
    int fpoly_threads = 1, fpoly_guard = cllc::kDefaultEnumGuard;
    fpoly_cmd->add_option("--partition", fpoly_partition, "Comma-separated weakly decreasing parts")
        ->required();
    fpoly_cmd->add_flag("--no-reduce", fpoly_no_reduce, "Skip fixed-point stripping");
    fpoly_cmd->add_flag("--json", fpoly_json, "JSON output");
    fpoly_cmd->add_option("--threads,-t", fpoly_threads, "Worker threads")->check(CLI::PositiveNumber);
    fpoly_cmd->add_option("--guard", fpoly_guard, "Enumeration guard on n");

    // fn
    auto* fn_cmd = app.add_subcommand("fn", "F for the single-cycle type [n]");
    int fn_n = 0;
    std::string fn_method = "closed";
    fn_cmd->add_option("--n", fn_n, "Cycle length")->required();
    fn_cmd->add_option("--method", fn_method, "closed, recurrence, or enum")
        ->check(CLI::IsMember({"closed", "recurrence", "enum"}));

    // stirling
    auto* stirling_cmd = app.add_subcommand("stirling", "Signless Stirling number of the first kind");
    int st_n = 0, st_k = 0;
    stirling_cmd->add_option("--n", st_n)->required();
    stirling_cmd->add_option("--k", st_k)->required();

    // hultman
    auto* hultman_cmd = app.add_subcommand("hultman", "Hultman number H(n,k)");
    int hu_n = 0, hu_k = 0;
    bool hu_brute = false;
    hultman_cmd->add_option("--n", hu_n)->required();
    hultman_cmd->add_option("--k", hu_k)->required();
    hultman_cmd->add_flag("--brute", hu_brute, "Compute by enumeration of Q_{n+1}");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Certify a polynomial given as text");
    std::string certify_poly;
    bool want_lc = false, want_rr = false, want_hb = false;
    certify_cmd->add_option("--poly", certify_poly, "Polynomial, e.g. \"8+15*z+z^2\"")->required();
    certify_cmd->add_flag("--lc", want_lc, "Log-concavity check");
    certify_cmd->add_flag("--rr", want_rr, "Real-rootedness certificate");
    certify_cmd->add_flag("--hb", want_hb, "Even/odd-part stability check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cllc::kExitUsage;
    }

    if (scan_cmd->parsed()) {
        cllc::ScanOptions opts;
        opts.threads = env_threads(scan_threads);
        opts.reduce = !scan_no_reduce;
        opts.guard = scan_guard;
        opts.timing = !scan_no_timing;
        opts.cache_path = scan_cache;
        const auto records = cllc::scan(scan_min, scan_max, opts);
        const std::string report =
            scan_format == "json" ? cllc::to_json_lines(records) : cllc::to_table(records);
        if (scan_out.empty()) {
            std::cout << report;
        } else {
            std::ofstream out(scan_out);
            if (!out) throw cllc::usage_error("cannot open output file " + scan_out);
            out << report;
        }
        bool counterexample = false, check_failed = false;
        for (const auto& rec : records) {
            if (!rec.log_concave || !rec.real_rooted) counterexample = true;
            if (!rec.all_checks_pass()) check_failed = true;
        }
        if (check_failed) throw cllc::consistency_error("a cross-check failed during the scan");
        return counterexample ? cllc::kExitCounterexample : cllc::kExitOk;
    }

    if (verify_cmd->parsed()) {
        const auto report = cllc::verify_identities(verify_max);
        std::cout << report.to_string();
        return report.all_ok() ? cllc::kExitOk : cllc::kExitConsistency;
    }

    if (fpoly_cmd->parsed()) {
        const auto lambda = cllc::Partition::parse(fpoly_partition);
        cllc::EnumOptions opts{env_threads(fpoly_threads), fpoly_guard};
        const auto f = cllc::f_of_partition(lambda, !fpoly_no_reduce, opts);
        if (fpoly_json) {
            ordered_json j = poly_json(f);
            j["partition"] = lambda.parts();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << f.to_string() << "\n";
        }
        return cllc::kExitOk;
    }

    if (fn_cmd->parsed()) {
        if (fn_n < 1) throw cllc::usage_error("fn: --n must be >= 1");
        IntPolynomial f;
        if (fn_method == "closed") f = cllc::f_cyclic_closed(fn_n);
        else if (fn_method == "recurrence")
            f = fn_n >= 2 ? cllc::f_cyclic_recurrence(fn_n)[fn_n] : cllc::f_cyclic_closed(fn_n);
        else
            f = cllc::f_poly(cllc::Permutation::canonical(cllc::Partition(std::vector<int>{fn_n})));
        std::cout << f.to_string() << "\n";
        return cllc::kExitOk;
    }

    if (stirling_cmd->parsed()) {
        std::cout << cllc::stirling_first(st_n, st_k).str() << "\n";
        return cllc::kExitOk;
    }

    if (hultman_cmd->parsed()) {
        const Int h = hu_brute ? cllc::hultman_brute(hu_n, hu_k) : cllc::hultman(hu_n, hu_k);
        std::cout << h.str() << "\n";
        return cllc::kExitOk;
    }

    if (certify_cmd->parsed()) {
        const auto p = IntPolynomial::parse(certify_poly);
        if (!want_lc && !want_rr && !want_hb) want_lc = want_rr = true;
        ordered_json j;
        j["poly"] = poly_json(p);
        if (want_lc) {
            const auto lc = cllc::is_log_concave(p);
            ordered_json e;
            e["log_concave"] = lc.log_concave;
            e["contiguous_support"] = lc.contiguous_support;
            if (lc.witness >= 0) e["witness_index"] = lc.witness;
            j["lc"] = e;
        }
        if (want_rr) j["rr"] = certificate_json(cllc::certify_real_rooted(p));
        if (want_hb) {
            const auto hb = cllc::hermite_biehler_check(p, /*weak=*/true);
            ordered_json e;
            e["even_part"] = hb.even.to_string();
            e["odd_part"] = hb.odd.to_string();
            e["even_real_rooted"] = hb.even_real_rooted;
            e["odd_real_rooted"] = hb.odd_real_rooted;
            e["even_roots_nonpositive"] = hb.even_roots_nonpositive;
            e["odd_roots_nonpositive"] = hb.odd_roots_nonpositive;
            e["parts_interlace"] = hb.parts_interlace;
            e["weakly_stable"] = hb.ok();
            j["hb"] = e;
        }
        std::cout << j.dump(2) << "\n";
        return cllc::kExitOk;
    }

    return cllc::kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cllc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n  " << e.input() << "\n  "
                  << std::string(e.position(), ' ') << "^\n";
        return cllc::kExitUsage;
    } catch (const cllc::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cllc::kExitUsage;
    } catch (const cllc::consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return cllc::kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cllc::kExitUsage;
    }
}
