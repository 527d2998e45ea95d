#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/report.hpp"
#include "hypspec/suites.hpp"

using namespace hypspec;

// exit codes: 0 all cases pass, 1 verification failures, 2 configuration or I/O error
int main(int argc, char** argv) {
    CLI::App app{"hypspec-verify: run numerical verification suites"};
    std::string suite = "all", dims, gamma, lambda, out, csv;
    double tol_rel = 0, tol_margin = 1e-9;
    int jobs = 1;
    bool list = false;
    app.add_option("--suite", suite, "suite name or 'all'");
    app.add_option("--n", dims, "comma-separated dimensions");
    app.add_option("--gamma", gamma, "gamma grid: start:stop:count:scale or a list");
    app.add_option("--lambda", lambda, "lambda grid: start:stop:count:scale[:0] or a list");
    auto* tr = app.add_option("--tol-rel", tol_rel, "relative tolerance for every relative case");
    app.add_option("--tol-margin", tol_margin, "allowed negative relative margin");
    app.add_option("--out", out, "JSON report path");
    app.add_option("--csv", csv, "CSV table path (per-suite suffix when several suites run)");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));
    app.add_flag("--list", list, "list suites and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& s : list_suites()) std::cout << s.name << "\t" << s.verifies << "\n";
        return 0;
    }

    std::vector<std::string> names;
    std::vector<VerificationReport> reports;
    try {
        if (suite == "all")
            for (const auto& s : list_suites()) names.push_back(s.name);
        else names.push_back(suite);

        SuiteConfig base;
        if (!dims.empty()) base.dimension_list = parse_int_list(dims);
        if (!gamma.empty()) base.gamma_grid = parse_grid(gamma);
        if (!lambda.empty()) base.lambda_grid = parse_grid(lambda);
        if (*tr) base.tolerances.rel = tol_rel;
        base.tolerances.margin = tol_margin;
        base.jobs = jobs;

        if (out.empty()) {
            const char* dir = std::getenv("HYPSPEC_OUT_DIR");
            std::filesystem::path p = dir && *dir ? dir : ".";
            out = (p / (suite == "all" ? "hypspec_report.json" : "hypspec_" + suite + ".json")).string();
        }

        for (const auto& name : names) {
            SuiteConfig c = base;
            c.suite_name = name;
            if (!csv.empty()) {
                if (names.size() == 1) c.csv_path = csv;
                else {
                    std::filesystem::path p(csv);
                    c.csv_path = (p.parent_path() / (p.stem().string() + "." + name + p.extension().string())).string();
                }
            }
            reports.push_back(run_suite(c));
            const auto& s = reports.back().summary;
            std::cout << (s.passed == s.total ? "PASS " : "FAIL ") << name << "  " << s.passed << "/" << s.total
                      << "  max_rel=" << s.max_abs_residual << "  min_margin=" << s.min_margin << "  " << s.wall_time_seconds
                      << " s" << std::endl;
        }
        write_report(reports, out);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }

    int failing = 0;
    for (const auto& r : reports)
        if (r.summary.passed != r.summary.total) ++failing;
    std::cout << "report: " << out << "\n";
    if (failing) std::cout << failing << " suite(s) with failures\n";
    return failing ? 1 : 0;
}
