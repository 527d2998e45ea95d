#include "hypspec/grid.hpp"

#include <cmath>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad number in grid spec: '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ConfigError("bad number in grid spec: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    if (text.empty()) throw ConfigError("empty grid spec");
    if (text.find(':') == std::string::npos) {
        for (const auto& part : split(text, ',')) g.points.push_back(to_double(part));
        if (g.points.empty()) throw ConfigError("empty grid spec");
        return g;
    }
    auto parts = split(text, ':');
    if (parts.size() != 4 && parts.size() != 5) throw ConfigError("grid spec must be start:stop:count:scale");
    g.start = to_double(parts[0]);
    g.stop = to_double(parts[1]);
    double c = to_double(parts[2]);
    if (c < 1 || c != std::floor(c) || c > 1e7) throw ConfigError("grid count must be a positive integer");
    g.count = int(c);
    if (parts[3] == "linear" || parts[3] == "lin") g.scale = GridScale::linear;
    else if (parts[3] == "geometric" || parts[3] == "geom" || parts[3] == "log") g.scale = GridScale::geometric;
    else throw ConfigError("grid scale must be linear or geometric");
    if (parts.size() == 5) {
        if (parts[4] != "0") throw ConfigError("optional fifth grid field must be 0");
        g.with_zero = true;
    }
    if (g.scale == GridScale::geometric && !(g.start > 0 && g.stop > 0))
        throw ConfigError("geometric grid needs positive endpoints");
    return g;
}

std::vector<double> expand(const GridSpec& g) {
    if (!g.points.empty()) return g.points;
    std::vector<double> v;
    if (g.with_zero) v.push_back(0.0);
    for (int i = 0; i < g.count; ++i) {
        double t = g.count == 1 ? 0.0 : double(i) / (g.count - 1);
        if (g.scale == GridScale::linear) v.push_back(g.start + t * (g.stop - g.start));
        else v.push_back(g.start * std::pow(g.stop / g.start, t));
    }
    return v;
}

GridSpec default_lambda_grid() {
    GridSpec g;
    g.start = 1e-3;
    g.stop = 1e3;
    g.count = 200;
    g.scale = GridScale::geometric;
    g.with_zero = true;
    return g;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        double v = to_double(part);
        if (v != std::floor(v) || v < 1 || v > 1000) throw ConfigError("bad integer '" + part + "'");
        out.push_back(int(v));
    }
    if (out.empty()) throw ConfigError("empty integer list");
    return out;
}

}  // namespace hypspec
