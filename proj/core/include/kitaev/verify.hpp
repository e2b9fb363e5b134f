#ifndef KITAEV_VERIFY_HPP
#define KITAEV_VERIFY_HPP

#include <string>
#include <vector>

namespace kitaev {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    double tolerance = 0.0;
    double measured = 0.0;  // worst observed deviation
    std::string details;
};

struct VerifyOptions {
    bool skip_torus = false;
    int num_threads = 1;  // used by the torus residual sweep
};

/// Runs the full verification suite: closed forms against the
/// exact-diagonalization oracle, at desk scale, each check at a pinned
/// tolerance. Deterministic across runs.
std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One line per check: "PASS name (tol=..., measured=...) details".
std::string format_check_line(const CheckResult& result);

/// Machine-readable report: {"all_passed": ..., "checks": [...]}.
std::string verify_report_json(const std::vector<CheckResult>& results);

} // namespace kitaev

#endif
