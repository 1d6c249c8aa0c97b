#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fbma {

/// One checked claim: pass iff residual <= tolerance (unless skipped).
struct VerificationReport {
    std::string claim;
    std::string status;  // "pass", "fail" or "skipped"
    double residual = 0.0;
    double tolerance = 0.0;
    std::string inputs;

    bool passed() const { return status == "pass"; }
    bool skipped() const { return status == "skipped"; }
};

enum class Suite { Surface, Annuli, Otsuki, Geometry, All };

std::optional<Suite> parse_suite(const std::string& name);

/// Runs every check of the suite.  `tol_override`, when set, replaces each
/// check's tolerance (useful to stress the reporting path).
std::vector<VerificationReport> run_suite(Suite suite,
                                          std::optional<double> tol_override = std::nullopt);

/// True when no non-skipped report failed.
bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace fbma
