#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cllc/analysis.hpp"
#include "cllc/iopoly.hpp"
#include "cllc/partition.hpp"
#include "cllc/polynomial.hpp"

namespace cllc {

inline constexpr const char* kToolVersion = "cllc 1.0.0";

struct ScanRecord {
    Partition partition;
    IntPolynomial f;
    std::optional<Partition> reduced_from; // set when unit parts were stripped
    bool log_concave = false;
    bool contiguous_support = false;
    bool real_rooted = false;
    std::map<std::string, bool> cross_checks;
    long long elapsed_ms = 0;

    bool all_checks_pass() const;
};

struct ScanOptions {
    int threads = 1;
    bool reduce = true;
    int guard = kDefaultEnumGuard;
    int invariance_samples = 3;
    bool timing = true;          // with false, elapsed_ms is reported as 0
    std::string cache_path;      // empty: no cache
};

/// Sweeps every partition of every n in [n_min, n_max]: computes F_lambda,
/// certifies log-concavity and real-rootedness, and runs cross-checks.
/// Records come back in deterministic order (n ascending, partitions
/// reverse-lexicographic) regardless of the thread count.
std::vector<ScanRecord> scan(int n_min, int n_max, const ScanOptions& opts = {});

/// One JSON-lines row per record, schema:
/// {"n":int,"partition":[ints],"coeffs":[decimal strings],"lc":bool,
///  "contiguous":bool,"rr":bool,"checks":{name:bool},"ms":int}
std::string to_json_lines(const std::vector<ScanRecord>& records);

/// Human-readable table.
std::string to_table(const std::vector<ScanRecord>& records);

struct IdentityResult {
    std::string name;
    bool pass = false;
    bool expected_fail = false; // a deliberately failing control check
    std::string detail;
    bool as_expected() const { return pass != expected_fail; }
};

struct IdentityReport {
    std::vector<IdentityResult> results;
    bool all_ok() const;
    std::string to_string() const;
};

/// Runs the cross-identity suite at enumeration scale n_max (capped at 9 for
/// the enumeration-backed identities; closed-form identities go further).
IdentityReport verify_identities(int n_max);

} // namespace cllc
