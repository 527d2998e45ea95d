#pragma once

#include <string>
#include <vector>

namespace hypspec {

enum class GridScale { linear, geometric };

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    GridScale scale = GridScale::linear;
    bool with_zero = false;       // prepend 0 (geometric grids cannot reach it)
    std::vector<double> points;   // explicit list; overrides start/stop/count when non-empty
};

// Accepts "start:stop:count:scale", optionally followed by ":0" to prepend zero,
// a comma-separated list "0,0.5,2", or a single number. Throws ConfigError.
GridSpec parse_grid(const std::string& text);

std::vector<double> expand(const GridSpec& g);

// geometric 1e-3 .. 1e3, 200 points, plus 0
GridSpec default_lambda_grid();

std::vector<int> parse_int_list(const std::string& text);

}  // namespace hypspec
