#include "hypspec/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

using json = nlohmann::ordered_json;

// non-finite values become null
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json grid_echo(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

nlohmann::ordered_json report_body(const VerificationReport& r) {
    json body;
    body["suite"] = r.suite_name;
    const auto& c = r.config;
    json cfg;
    cfg["dimensions"] = c.dims;
    cfg["gamma_grid"] = grid_echo(c.gammas);
    cfg["lambda_grid"] = grid_echo(c.lambdas);
    cfg["tol_rel"] = c.tol_rel ? json(*c.tol_rel) : json("suite default");
    cfg["tol_margin"] = c.tol_margin;
    cfg["quadrature"] = {{"rho_max", c.quadrature.rho_max},
                         {"max_nodes", c.quadrature.max_nodes},
                         {"abs_tol", c.quadrature.abs_tol},
                         {"rel_tol", c.quadrature.rel_tol}};
    body["config"] = cfg;
    json cases = json::array();
    for (const auto& k : r.cases) {
        json e;
        json in;
        for (const auto& [name, v] : k.inputs) in[name] = num(v);
        e["inputs"] = in;
        e["kind"] = k.kind == CaseKind::relative ? "relative" : "margin";
        e["lhs"] = num(k.lhs);
        e["rhs"] = num(k.rhs);
        e["residual"] = num(k.residual);
        e["tolerance"] = k.tolerance;
        e["pass"] = k.pass;
        if (!k.error.empty()) e["error"] = k.error;
        cases.push_back(e);
    }
    body["cases"] = cases;
    body["summary"] = {{"total", r.summary.total},
                       {"passed", r.summary.passed},
                       {"max_abs_residual", num(r.summary.max_abs_residual)},
                       {"min_margin", num(r.summary.min_margin)}};
    return body;
}

nlohmann::ordered_json report_document(const std::vector<VerificationReport>& reports) {
    json doc;
    json header;
    header["timestamp"] = utc_timestamp();
    json times;
    for (const auto& r : reports) times[r.suite_name] = r.summary.wall_time_seconds;
    header["wall_time_seconds"] = times;
    doc["header"] = header;
    json body = json::array();
    for (const auto& r : reports) body.push_back(report_body(r));
    doc["body"] = body;
    return doc;
}

void write_report(const std::vector<VerificationReport>& reports, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write report to " + path);
    f << report_document(reports).dump(1) << '\n';
    if (!f) throw ConfigError("write failed for " + path);
}

void write_csv(const VerificationReport& r, const std::string& path) {
    std::vector<std::string> names;
    for (const auto& k : r.cases)
        for (const auto& in : k.inputs)
            if (std::find(names.begin(), names.end(), in.first) == names.end()) names.push_back(in.first);
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write csv to " + path);
    for (const auto& n : names) f << n << ',';
    f << "lhs,rhs,residual\n";
    for (const auto& k : r.cases) {
        for (const auto& n : names) {
            for (const auto& in : k.inputs)
                if (in.first == n) f << fmt(in.second);
            f << ',';
        }
        f << fmt(k.lhs) << ',' << fmt(k.rhs) << ',' << fmt(k.residual) << '\n';
    }
    if (!f) throw ConfigError("write failed for " + path);
}

}  // namespace hypspec
