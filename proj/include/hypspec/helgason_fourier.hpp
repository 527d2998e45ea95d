#pragma once

#include <cstddef>
#include <functional>

namespace hypspec {

struct QuadratureSpec {
    double rho_max = 0.0;  // 0 picks the default cutoff
    std::size_t max_nodes = 200000;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
};

struct RadialFunction {
    std::function<double(double)> evaluator;  // f as a function of rho
    double decay_exponent = 0.0;              // mu with |f| <~ e^{-mu rho}
};

struct TransformResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    double rho_max = 0.0;
};

// |c(l)|^{-2} = |Gamma(il+(n-1)/2)|^2 / (2 (2pi)^n |Gamma(il)|^2); the limit 0 at l = 0
double c_function_inv_sq(double lambda, int n);
// |c(l)|^{-2} / l^2, finite at l = 0
double c_function_inv_sq_regularized(double lambda, int n);

// 2^{(n-2)/2} Gamma(n/2) (sinh rho)^{(2-n)/2} P^{(2-n)/2}_{il-1/2}(cosh rho)
double spherical_fn(double lambda, int n, double rho);

// max(40, (20+n) max(1, 1/net)) with net = mu - (n-1)/2, stretched until the tail bound is below abs_tol
double default_rho_max(double decay_exponent, int n, double abs_tol);

// (2pi)^{n/2} int_0^inf f(rho) (sinh rho)^{n/2} P^{(2-n)/2}_{il-1/2}(cosh rho) drho
TransformResult radial_hf_transform(const RadialFunction& f, double lambda, int n, const QuadratureSpec& quad = {});

// |Gamma(nu+il)|^2 / |Gamma(nu+gamma+il)|^2
double hf_K_closed(double nu, double gamma, double lambda);

struct SeriesResult {
    double value = 0.0;
    std::size_t terms = 0;  // terms summed explicitly
    double tail = 0.0;      // integral estimate of the remainder, included in value
    double error = 0.0;
};

// sum_k |Gamma(nu+k+il)|^2 (n/2-g)_k / (Gamma((n-1)/2+nu+k) Gamma(1/2+nu+k) k!), (n-1)/2 <= g <= n/2
SeriesResult hf_H_series(double nu, double gamma, int n, double lambda, std::size_t max_terms = 100000);

// (4pi)^{n/2}; the series above carries no such factor, so
// radial_hf_transform(H) = hf_H_series_normalization(n) * hf_H_series
double hf_H_series_normalization(int n);

// sum_k |Gamma(nu+k+il)|^2 / (Gamma(2nu+g+k) k!), which equals Gamma(g) hf_K_closed(nu, g, l)
SeriesResult hf_K_series(double nu, double gamma, double lambda, std::size_t max_terms = 100000);

// (Gamma(g+2nu) Gamma(g) / (Gamma(nu+(n-1)/2) Gamma(nu+1/2))) hf_K_closed(nu, g, l)
double hf_H_upper_bound(double nu, double gamma, int n, double lambda);

// 2^{n/2} |Gamma((g+1-n)/2+il)|^2 / (Gamma(g/2) Gamma((g+2-n)/2)), the value of
// int_0^inf (cosh rho/2)^{-g} (sinh rho)^{n/2} P^{(2-n)/2}_{il-1/2}(cosh rho) drho for g > n-1
double legendre_integral_closed(double g, double lambda, int n);

}  // namespace hypspec
