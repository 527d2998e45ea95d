#include "hypspec/green_kernels.hpp"

#include <cmath>
#include <numeric>

#include "hypspec/errors.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

const double kLn2 = std::log(2.0);

double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
}

double log_sinh(double x) {
    if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
    return std::log(std::sinh(x));
}

double dot(std::span<const double> x, std::span<const double> y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double dist_sq(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return s;
}

void same_dim(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty()) throw DomainError("points must share a positive dimension");
}

void require_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive and finite");
}

// Gamma(n/2) / (pi^{n/2} 4^g Gamma(g)^2)
double green_coeff(double g, int n) {
    return std::exp(log_abs_gamma(n / 2.0) - 0.5 * n * std::log(kPi) - 2.0 * g * kLn2 - 2.0 * log_abs_gamma(g));
}

void check_green_args(double g, int n, std::span<const double> x) {
    if (!(g > 0.0)) throw DomainError("gamma must be positive");
    if (n < 1 || static_cast<std::size_t>(n) != x.size()) throw DomainError("n must match the point dimension");
}

}  // namespace

void validate(const KernelParams& p) {
    if (!(p.nu >= 0.0) || !(p.gamma > 0.0) || p.n < 2) throw DomainError("need nu >= 0, gamma > 0, n >= 2");
}

double kernel_coeff(const KernelParams& p) {
    validate(p);
    double l = log_abs_gamma((p.n - 1) / 2.0 + p.nu) + log_abs_gamma(p.nu + 0.5) - p.n * kLn2 -
               0.5 * p.n * std::log(kPi) - log_abs_gamma(p.gamma) - log_abs_gamma(2.0 * p.nu + p.gamma);
    return std::exp(l);
}

double kernel_K(const KernelParams& p, double rho) {
    validate(p);
    require_rho(rho);
    const double a = p.nu + (p.n - 1) / 2.0, b = p.nu + 0.5, c = 2.0 * p.nu + p.gamma;
    const double lc = log_cosh(rho / 2.0);
    const double z = std::exp(-2.0 * lc);
    cplx f;
    if (z <= 0.5) {
        f = hyp2f1(a, b, c, z);
    } else {
        double t = std::tanh(rho / 2.0);
        f = hyp2f1_one_minus(a, b, c, t * t);
    }
    return kernel_coeff(p) * std::exp((1.0 - p.n - 2.0 * p.nu) * lc) * f.real();
}

double kernel_H(const KernelParams& p, double rho) {
    validate(p);
    require_rho(rho);
    double l = (1.0 - 2.0 * p.gamma - 2.0 * p.nu) * log_cosh(rho / 2.0) + (2.0 * p.gamma - p.n) * log_sinh(rho / 2.0);
    return std::exp(l);
}

void validate_ball_point(std::span<const double> x) {
    if (x.empty() || !(dot(x, x) < 1.0)) throw DomainError("ball point must satisfy |x| < 1");
}

void validate_halfspace_point(std::span<const double> x) {
    if (x.empty() || !(x[0] > 0.0)) throw DomainError("half-space point must satisfy x_1 > 0");
}

double sinh_half_sq_ball(std::span<const double> x, std::span<const double> y) {
    same_dim(x, y);
    validate_ball_point(x);
    validate_ball_point(y);
    return dist_sq(x, y) / ((1.0 - dot(x, x)) * (1.0 - dot(y, y)));
}

double sinh_half_sq_halfspace(std::span<const double> x, std::span<const double> y) {
    same_dim(x, y);
    validate_halfspace_point(x);
    validate_halfspace_point(y);
    return dist_sq(x, y) / (4.0 * x[0] * y[0]);
}

double cosh_half_distance_ball(std::span<const double> x, std::span<const double> y) {
    // 1 - 2x.y + |x|^2|y|^2 = |x-y|^2 + (1-|x|^2)(1-|y|^2)
    return std::sqrt(1.0 + sinh_half_sq_ball(x, y));
}

double cosh_half_distance_halfspace(std::span<const double> x, std::span<const double> y) {
    same_dim(x, y);
    validate_halfspace_point(x);
    validate_halfspace_point(y);
    return std::sqrt(dist_sq(x, y) + 4.0 * x[0] * y[0]) / (2.0 * std::sqrt(x[0] * y[0]));
}

double distance_ball(std::span<const double> x, std::span<const double> y) {
    return 2.0 * std::asinh(std::sqrt(sinh_half_sq_ball(x, y)));
}

double distance_halfspace(std::span<const double> x, std::span<const double> y) {
    return 2.0 * std::asinh(std::sqrt(sinh_half_sq_halfspace(x, y)));
}

double green_incomplete_integral(double g, int n, double T) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("upper limit must be finite and nonnegative");
    if (T == 0.0) return 0.0;
    const double half_n = n / 2.0;
    // [0, min(T,1)] with t = s^{1/g}, so t^{g-1} dt = ds/g
    double s_max = std::pow(std::min(T, 1.0), g);
    auto lower = [&](double s) { return std::pow(1.0 + std::pow(s, 1.0 / g), -half_n) / g; };
    auto r1 = integrate_adaptive<double>(lower, 0.0, s_max, 0.0, 1e-14, 400000);
    double total = r1.value;
    bool ok = r1.converged;
    if (T > 1.0) {
        // [1, T] with t = e^u
        auto upper = [&](double u) { return std::exp(g * u - half_n * std::log1p(std::exp(u))); };
        auto r2 = integrate_adaptive<double>(upper, 0.0, std::log(T), 0.0, 1e-14, 400000);
        total += r2.value;
        ok = ok && r2.converged;
    }
    if (!ok) throw ConvergenceError("green_incomplete_integral: quadrature did not converge");
    return total;
}

double green_ball(double gamma, int n, std::span<const double> x, std::span<const double> y) {
    same_dim(x, y);
    check_green_args(gamma, n, x);
    validate_ball_point(x);
    validate_ball_point(y);
    double d2 = dist_sq(x, y);
    if (d2 == 0.0) throw DomainError("green_ball: coincident points");
    double T = (1.0 - dot(x, x)) * (1.0 - dot(y, y)) / d2;
    return green_coeff(gamma, n) * std::pow(d2, gamma - n / 2.0) * green_incomplete_integral(gamma, n, T);
}

double green_halfspace(double gamma, int n, std::span<const double> x, std::span<const double> y) {
    same_dim(x, y);
    check_green_args(gamma, n, x);
    validate_halfspace_point(x);
    validate_halfspace_point(y);
    double d2 = dist_sq(x, y);
    if (d2 == 0.0) throw DomainError("green_halfspace: coincident points");
    double T = 4.0 * x[0] * y[0] / d2;
    return green_coeff(gamma, n) * std::pow(d2, gamma - n / 2.0) * green_incomplete_integral(gamma, n, T);
}

double default_fd_step(double rho) { return std::max(1e-4, 1e-3 * rho); }

double radial_laplace_beltrami(const RadialFn& f, double rho, double step, int n) {
    require_rho(rho);
    if (!(step > 0.0)) throw DomainError("step must be positive");
    if (step > rho / 4.0) throw DomainError("step too large relative to rho");
    const double h = step;
    double fm2 = f(rho - 2 * h), fm1 = f(rho - h), f0 = f(rho), fp1 = f(rho + h), fp2 = f(rho + 2 * h);
    double d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    double d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    return d2 + (n - 1) / std::tanh(rho) * d1;
}

DifferentialResidual h_kernel_differential_residual(double gamma, int n, double rho, double step) {
    if (!(gamma >= (n - 1) / 2.0 && gamma < n / 2.0)) throw DomainError("need (n-1)/2 <= gamma < n/2");
    require_rho(rho);
    if (step <= 0.0) step = default_fd_step(rho);
    KernelParams p{0.0, gamma, n};
    RadialFn h = [&](double r) { return kernel_H(p, r); };
    const double hv = kernel_H(p, rho);
    const double q = (n - 1) * (n - 1) / 4.0;
    DifferentialResidual out;
    out.lhs = -radial_laplace_beltrami(h, rho, step, n) - q * hv;
    double sh = std::sinh(rho / 2.0), ch = std::cosh(rho / 2.0);
    double t1 = (n - 2.0 * gamma) * (2.0 * gamma - 2.0) / 4.0 *
                std::exp((2.0 * gamma - 2.0 - n) * std::log(sh) + (1.0 - 2.0 * gamma) * std::log(ch));
    double t2 = (2.0 * gamma - 1.0) * (2.0 * gamma + 1.0 - n) / (4.0 * ch * ch) * hv;
    out.rhs = t1 + t2;
    out.residual = out.lhs - out.rhs;
    out.scale = std::max(std::abs(out.rhs), q * std::abs(hv));
    return out;
}

}  // namespace hypspec
