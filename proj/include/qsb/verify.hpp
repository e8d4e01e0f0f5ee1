#pragma once

#include <string>
#include <vector>

namespace qsb {

/// One verified identity: the measured worst residual against its gate.
/// Informational records carry a residual but no gate (tolerance is NaN in
/// memory, null in JSON) and always pass.
struct VerifyRecord {
    std::string id;
    std::string statement;
    std::string params;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool informational = false;
    bool pass = true;
};

struct VerifyReport {
    std::string suite;
    int degree = 0;
    std::vector<VerifyRecord> records;
    bool overall_pass = true;
    double wall_seconds = 0.0;
};

struct VerifyOptions {
    int degree = 5;              // polynomial degree driven through the identities
    double tol_override = 0.0;   // > 0 replaces every per-class default
    bool mismatched_truncation = false;  // adds the deliberately failing consistency record
};

/// Runs "complex", "slice", "bergman", or "all". Results are deterministic:
/// fixed sampling streams, fixed reduction orders, fixed record order.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

/// Byte-stable JSON: fixed field order, floats at 17 significant digits.
/// Timing is reported separately so the payload stays reproducible.
std::string serialize_report(const VerifyReport& report);

}  // namespace qsb
