#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "hypspec/errors.hpp"
#include "hypspec/report.hpp"
#include "hypspec/suites.hpp"
#include "json.hpp"

using namespace hypspec;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    auto p = fs::temp_directory_path() / ("hypspec_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

SuiteConfig named(const std::string& s, int jobs = 1) {
    SuiteConfig c;
    c.suite_name = s;
    c.jobs = jobs;
    return c;
}

int run_cli(const std::string& args) {
    const char* bin = std::getenv("HYPSPEC_VERIFY_BIN");
    if (!bin) return -1;
    int st = std::system((std::string(bin) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("suite list") {
    auto s = list_suites();
    CHECK(s.size() >= 17);
    auto has = [&](const std::string& n) {
        return std::any_of(s.begin(), s.end(), [&](const SuiteInfo& i) { return i.name == n; });
    };
    for (auto n : {"transform-of-K", "transform-of-H", "legendre-integral", "decomposition-identity", "bottom-constants",
                   "symbol-equivalence", "halfdim-zeta-P", "halfdim-zeta-Ptilde", "even-band-margins", "ratio-chain",
                   "h-kernel-differential", "conformal-green-ball", "conformal-green-halfspace", "image-charge",
                   "constants-duality", "scattering-oracle", "gamma-closed-forms"})
        CHECK(has(n));
    for (const auto& i : s) CHECK(!i.verifies.empty());
}

TEST_CASE("suites pass on their defaults") {
    for (const auto& i : list_suites()) {
        auto r = run_suite(named(i.name, 4));
        INFO(i.name);
        CHECK(r.summary.total > 0);
        CHECK(r.summary.passed == r.summary.total);
        CHECK(r.summary.total == r.cases.size());
    }
    CHECK(run_suite(named("decomposition-identity")).summary.max_abs_residual <= 1e-10);
    CHECK(run_suite(named("even-band-margins")).summary.min_margin >= -1e-9);
}

TEST_CASE("ordering and determinism") {
    for (auto name : {"transform-of-K", "conformal-green-ball", "ratio-chain", "scattering-oracle"}) {
        auto a = run_suite(named(name, 1)), b = run_suite(named(name, 8));
        CHECK(report_body(a).dump() == report_body(b).dump());
        for (std::size_t i = 1; i < a.cases.size(); ++i) {
            const auto &p = a.cases[i - 1].inputs, &q = a.cases[i].inputs;
            std::vector<double> x, y;
            for (auto& e : p) x.push_back(e.second);
            for (auto& e : q) y.push_back(e.second);
            CHECK(x <= y);
        }
    }
}

TEST_CASE("grid overrides and failure recording") {
    auto c = named("transform-of-K");
    c.dimension_list = std::vector<int>{3};
    c.gamma_grid = parse_grid("1");
    c.lambda_grid = parse_grid("0,2");
    auto r = run_suite(c);
    CHECK(r.cases.size() == 6);
    CHECK(r.summary.passed == 6);

    // a negative order is outside the kernel's domain: recorded, not thrown
    c.gamma_grid = parse_grid("-1,1");
    r = run_suite(c);
    CHECK(r.cases.size() == 12);
    CHECK(r.summary.passed == 6);
    std::size_t errors = std::count_if(r.cases.begin(), r.cases.end(), [](const CaseResult& k) { return !k.error.empty(); });
    CHECK(errors == 6);

    auto t = named("image-charge");
    t.tolerances.rel = 1e-20;
    CHECK(run_suite(t).summary.passed < 100);

    CHECK_THROWS_AS(run_suite(named("no-such-suite")), ConfigError);
    auto j = named("image-charge", 0);
    CHECK_THROWS_AS(run_suite(j), ConfigError);
    auto e = named("decomposition-identity");
    e.dimension_list = std::vector<int>{};
    CHECK_THROWS_AS(run_suite(e), ConfigError);
}

TEST_CASE("report and csv files") {
    auto dir = scratch();
    auto c = named("legendre-integral");
    c.output_path = (dir / "r.json").string();
    c.csv_path = (dir / "r.csv").string();
    auto r = run_suite(c);
    std::ifstream jf(c.output_path);
    auto doc = nlohmann::json::parse(jf);
    CHECK(doc.contains("header"));
    CHECK(doc["header"].contains("timestamp"));
    CHECK(doc["body"][0]["suite"] == "legendre-integral");
    CHECK(doc["body"][0]["summary"]["total"] == 3);
    CHECK(!doc["body"][0]["summary"].contains("wall_time_seconds"));
    std::ifstream cf(c.csv_path);
    std::string header;
    std::getline(cf, header);
    CHECK(header == "g,lambda,n,lhs,rhs,residual");
    int rows = 0;
    for (std::string line; std::getline(cf, line);) ++rows;
    CHECK(rows == 3);

    c.output_path = (dir / "missing" / "r.json").string();
    CHECK_THROWS_AS(run_suite(c), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("command line exit codes") {
    if (!std::getenv("HYPSPEC_VERIFY_BIN")) {
        MESSAGE("HYPSPEC_VERIFY_BIN not set; skipping");
        return;
    }
    auto dir = scratch();
    auto out = (dir / "o.json").string();
    CHECK(run_cli("--list") == 0);
    CHECK(run_cli("--suite image-charge --jobs 2 --out " + out) == 0);
    CHECK(fs::exists(out));
    CHECK(run_cli("--suite image-charge --tol-rel 1e-20 --out " + out) == 1);
    CHECK(run_cli("--suite bogus --out " + out) == 2);
    CHECK(run_cli("--suite image-charge --lambda 1:2 --out " + out) == 2);
    CHECK(run_cli("--jobs 0 --out " + out) == 2);
    CHECK(run_cli("--suite image-charge --out " + (dir / "nope" / "o.json").string()) == 2);
    fs::remove_all(dir);
}
