#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/// Executable invariant suites, one per module plus "all". These back the
/// `check` CLI subcommand and are reused by the test suites.
namespace spinor3 {

struct CheckResult {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct CheckOptions {
    std::uint64_t seed = 0x5EEDF00Dull;
    /// When set, replaces every check's built-in tolerance.
    std::optional<double> tol_override;
};

const std::vector<std::string>& check_suites();

/// Runs one suite ("algebra", "pseudo", "proper", "map", "calculus",
/// "charts", "transport" or "all"). Throws ValidationError for an unknown
/// suite name.
std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opt);

}  // namespace spinor3
