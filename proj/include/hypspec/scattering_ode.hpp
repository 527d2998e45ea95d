#pragma once

#include <utility>
#include <vector>

namespace hypspec {

struct ScatteringProblem {
    int n = 3;
    double gamma = 0.5;
    double lambda = 0.0;
};

struct BoundaryCoefficients {
    double F = 0.0;             // coefficient of r^{n/2-gamma}
    double H = 0.0;             // coefficient of r^{n/2+gamma}
    double fit_residual = 0.0;  // max relative deviation of the fitted model on the window
    double min_phi = 0.0;       // smallest sampled value of phi on (tau_start, tau_end)
};

struct ScatteringOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double fit_tol = 1e-8;
    double r_min = 0.05;
    double r_max = 0.2;
    int samples = 30;
};

void validate(const ScatteringProblem& p);

// Integrates (1-t^2) phi'' + (n-2) t phi' + [(n^2/4-g^2)/(1-t^2) - (n-1)^2/4 - l^2] phi = 0 from the
// regular odd branch phi ~ t at tau_start and fits phi near t = 1, with t = (4-r^2)/(4+r^2), to
// F y_- + H y_+, where y_{-/+} are the local solutions with leading terms r^{n/2 -/+ g}.
// steps caps the integrator step at (tau_end - tau_start)/steps.
BoundaryCoefficients solve_scattering_ode(const ScatteringProblem& p, double tau_start = 1e-4,
                                          double tau_end = 1.0 - 1e-4, int steps = 4096,
                                          const ScatteringOptions& opt = {});

// (H/F)(l) / (H/F)(0) for each l; lambdas must contain 0
std::vector<std::pair<double, double>> scattering_symbol_normalized(int n, double gamma,
                                                                    const std::vector<double>& lambdas,
                                                                    int steps = 4096);

}  // namespace hypspec
