#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypspec/grid.hpp"
#include "hypspec/helgason_fourier.hpp"

namespace hypspec {

struct ToleranceConfig {
    std::optional<double> rel;  // overrides every relative-residual tolerance of the suite
    double margin = 1e-9;       // margins pass when (lhs - rhs) / max(|lhs|, |rhs|, 1) >= -margin
};

struct SuiteConfig {
    std::string suite_name;
    std::optional<std::vector<int>> dimension_list;  // unset: suite default
    std::optional<GridSpec> gamma_grid;
    std::optional<GridSpec> lambda_grid;
    ToleranceConfig tolerances;
    QuadratureSpec quadrature;
    std::string output_path;  // JSON report; empty means do not write
    std::string csv_path;     // plot table; empty means do not write
    int jobs = 1;
};

enum class CaseKind { relative, margin };

struct CaseResult {
    std::vector<std::pair<std::string, double>> inputs;
    CaseKind kind = CaseKind::relative;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // relative residual, or relative margin for margin cases
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // numeric error recorded instead of aborting the suite
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    double max_abs_residual = 0.0;  // over relative cases
    double min_margin = 0.0;        // over margin cases; 0 when there are none
    double wall_time_seconds = 0.0;
};

struct EffectiveConfig {
    std::vector<int> dims;
    std::vector<double> gammas;
    std::vector<double> lambdas;
    std::optional<double> tol_rel;
    double tol_margin = 1e-9;
    QuadratureSpec quadrature;
};

struct VerificationReport {
    std::string suite_name;
    EffectiveConfig config;
    std::vector<CaseResult> cases;
    ReportSummary summary;
};

struct SuiteInfo {
    std::string name;
    std::string verifies;
};

std::vector<SuiteInfo> list_suites();

// Runs the suite over its grid. Cases come back sorted lexicographically by input values whatever
// the job count. Writes the report and CSV when paths are set. Throws ConfigError on an unknown
// suite, an empty grid, or an unwritable path.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace hypspec
