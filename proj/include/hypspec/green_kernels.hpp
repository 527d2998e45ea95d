#pragma once

#include <functional>
#include <span>

namespace hypspec {

struct KernelParams {
    double nu = 0.0;
    double gamma = 1.0;
    int n = 3;
};

void validate(const KernelParams& p);

// Gamma((n-1)/2+nu) Gamma(nu+1/2) / (2^n pi^{n/2} Gamma(gamma) Gamma(2nu+gamma))
double kernel_coeff(const KernelParams& p);

// C (cosh rho/2)^{1-n-2nu} F(nu+(n-1)/2, nu+1/2; 2nu+gamma; cosh^{-2}(rho/2)), rho > 0
double kernel_K(const KernelParams& p, double rho);

// (cosh rho/2)^{1-2gamma-2nu} (sinh rho/2)^{2gamma-n}, rho > 0
double kernel_H(const KernelParams& p, double rho);

// Points are plain coordinate spans; the ball needs |x| < 1, the half-space x[0] > 0.
void validate_ball_point(std::span<const double> x);
void validate_halfspace_point(std::span<const double> x);

double cosh_half_distance_ball(std::span<const double> x, std::span<const double> y);
double cosh_half_distance_halfspace(std::span<const double> x, std::span<const double> y);
// sinh^2(rho/2), free of the cancellation in cosh^2 - 1 for nearby points
double sinh_half_sq_ball(std::span<const double> x, std::span<const double> y);
double sinh_half_sq_halfspace(std::span<const double> x, std::span<const double> y);
double distance_ball(std::span<const double> x, std::span<const double> y);
double distance_halfspace(std::span<const double> x, std::span<const double> y);

// int_0^T t^{g-1} (1+t)^{-n/2} dt by adaptive quadrature
double green_incomplete_integral(double gamma, int n, double T);

// Green's function of (-Delta)^gamma on the unit ball and on the upper half-space {x_1 > 0}
double green_ball(double gamma, int n, std::span<const double> x, std::span<const double> y);
double green_halfspace(double gamma, int n, std::span<const double> x, std::span<const double> y);

using RadialFn = std::function<double(double)>;

// max(1e-4, 1e-3 rho)
double default_fd_step(double rho);

// f'' + (n-1) coth(rho) f' from 5-point central differences; throws if step > rho/4
double radial_laplace_beltrami(const RadialFn& f, double rho, double step, int n);

struct DifferentialResidual {
    double lhs = 0.0;       // -Delta H - (n-1)^2/4 H
    double rhs = 0.0;       // closed form
    double residual = 0.0;  // lhs - rhs
    double scale = 0.0;     // max(|rhs|, (n-1)^2/4 |H|), the size of the terms being cancelled
};

// -Delta H_{0,g} - (n-1)^2/4 H_{0,g} against
// ((n-2g)(2g-2)/4)(sinh rho/2)^{2g-2-n}(cosh rho/2)^{1-2g} + ((2g-1)(2g+1-n)/(4cosh^2(rho/2))) H_{0,g},
// for (n-1)/2 <= g < n/2
DifferentialResidual h_kernel_differential_residual(double gamma, int n, double rho, double step = 0.0);

}  // namespace hypspec
