#include "hypspec/scattering_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>

#include <boost/numeric/odeint.hpp>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

using State = std::array<double, 2>;

struct Coeffs {
    double n, q, E;
};

Coeffs coeffs(const ScatteringProblem& p) {
    return {static_cast<double>(p.n), p.n * p.n / 4.0 - p.gamma * p.gamma,
            (p.n - 1.0) * (p.n - 1.0) / 4.0 + p.lambda * p.lambda};
}

// t * sum_k c_k u^{k+s}, u = 1 - t^2, with c_0 = 1 and
// c_k I(k+s) = -c_{k-1} J(k-1+s), I(s) = 4s^2 - 2ns + q, J(s) = -4s(s-1) - (10-2n)s + n-2-E
double frobenius(const Coeffs& c, double s, double t, double u) {
    auto I = [&](double x) { return 4.0 * x * x - 2.0 * c.n * x + c.q; };
    auto J = [&](double x) { return -4.0 * x * (x - 1.0) - (10.0 - 2.0 * c.n) * x + (c.n - 2.0 - c.E); };
    double ck = 1.0, uk = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        ck *= -J(k - 1 + s) / I(k + s);
        uk *= u;
        double term = ck * uk;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return t * std::pow(u, s) * sum;
}

}  // namespace

void validate(const ScatteringProblem& p) {
    if (p.n < 2) throw DomainError("scattering: n must be at least 2");
    if (!(p.gamma > 0.0 && p.gamma < p.n / 2.0)) throw DomainError("scattering: need 0 < gamma < n/2");
    // exponents n/2 -/+ gamma differ by 2 gamma; an even integer gap makes the local solutions resonate
    if (std::abs(p.gamma - std::round(p.gamma)) < 1e-6)
        throw DomainError("scattering: resonant order (boundary exponents differ by an even integer)");
}

BoundaryCoefficients solve_scattering_ode(const ScatteringProblem& p, double tau_start, double tau_end, int steps,
                                          const ScatteringOptions& opt) {
    validate(p);
    if (!(tau_start > 0.0 && tau_start <= 1e-4)) throw DomainError("scattering: need 0 < tau_start <= 1e-4");
    if (!(tau_end <= 1.0 - 1e-4 && tau_end > tau_start)) throw DomainError("scattering: need tau_end <= 1 - 1e-4");
    if (steps < 1 || opt.samples < 2 || !(opt.r_min > 0.0 && opt.r_max > opt.r_min))
        throw DomainError("scattering: invalid options");
    const Coeffs c = coeffs(p);

    auto tau_of_r = [](double r) { return (4.0 - r * r) / (4.0 + r * r); };
    if (tau_of_r(opt.r_min) > tau_end) throw DomainError("scattering: fit window lies beyond tau_end");

    // observation times: a coarse interior grid for the positivity check, then the fit window
    std::vector<double> times;
    const int interior = 256;
    const double t_fit_lo = tau_of_r(opt.r_max);
    for (int i = 1; i < interior; ++i) times.push_back(tau_start + (t_fit_lo - tau_start) * i / interior);
    std::vector<double> rs(opt.samples);
    for (int j = 0; j < opt.samples; ++j) {
        // ascending tau means descending r
        rs[j] = opt.r_max + (opt.r_min - opt.r_max) * j / (opt.samples - 1);
        times.push_back(tau_of_r(rs[j]));
    }
    std::vector<double> all_times;
    all_times.push_back(tau_start);
    all_times.insert(all_times.end(), times.begin(), times.end());

    auto rhs = [&c](const State& x, State& dx, double t) {
        double u = (1.0 - t) * (1.0 + t);
        dx[0] = x[1];
        dx[1] = -((c.n - 2.0) * t * x[1] + (c.q / u - c.E) * x[0]) / u;
    };
    const double a3 = -(c.n - 2.0 + c.q - c.E) / 6.0;
    State x{tau_start + a3 * tau_start * tau_start * tau_start, 1.0 + 3.0 * a3 * tau_start * tau_start};

    std::vector<double> phi;
    phi.reserve(all_times.size());
    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_dense_output(opt.abs_tol, opt.rel_tol, (tau_end - tau_start) / steps,
                                          ode::runge_kutta_dopri5<State>());
    try {
        ode::integrate_times(stepper, rhs, x, all_times.begin(), all_times.end(), (tau_end - tau_start) / steps,
                             [&phi](const State& s, double) { phi.push_back(s[0]); },
                             ode::max_step_checker(10000000));
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("scattering: integration failed: ") + e.what());
    }
    if (phi.size() != all_times.size()) throw ConvergenceError("scattering: integration stopped early");
    for (double v : phi)
        if (!std::isfinite(v)) throw ConvergenceError("scattering: non-finite solution");

    BoundaryCoefficients out;
    out.min_phi = *std::min_element(phi.begin() + 1, phi.end());

    // weighted least squares on the window, rows scaled by r^{-(n/2-g)}
    const double s_minus = (c.n - 2.0 * p.gamma) / 4.0, s_plus = (c.n + 2.0 * p.gamma) / 4.0;
    const int m = opt.samples;
    std::vector<double> A0(m), A1(m), b(m), w(m);
    for (int j = 0; j < m; ++j) {
        double r = rs[j], t = tau_of_r(r);
        double u = 16.0 * r * r / ((4.0 + r * r) * (4.0 + r * r));
        w[j] = std::pow(r, -(c.n / 2.0 - p.gamma));
        A0[j] = w[j] * frobenius(c, s_minus, t, u);
        A1[j] = w[j] * frobenius(c, s_plus, t, u);
        b[j] = w[j] * phi[all_times.size() - m + j];
    }
    // modified Gram-Schmidt on the two columns
    auto dotv = [m](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) s += x[j] * y[j];
        return s;
    };
    double r00 = std::sqrt(dotv(A0, A0));
    std::vector<double> q0(m), q1(m);
    for (int j = 0; j < m; ++j) q0[j] = A0[j] / r00;
    double r01 = dotv(q0, A1);
    for (int j = 0; j < m; ++j) q1[j] = A1[j] - r01 * q0[j];
    double r11 = std::sqrt(dotv(q1, q1));
    if (!(r11 > 1e-14 * r00)) throw ConvergenceError("scattering: local solutions are numerically dependent");
    for (int j = 0; j < m; ++j) q1[j] /= r11;
    double z0 = dotv(q0, b), z1 = dotv(q1, b);
    out.H = z1 / r11;
    out.F = (z0 - r01 * out.H) / r00;
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        double model = out.F * A0[j] + out.H * A1[j];
        worst = std::max(worst, std::abs(model - b[j]) / std::abs(b[j]));
    }
    out.fit_residual = worst;
    if (out.F == 0.0) throw ConvergenceError("scattering: vanishing F coefficient");
    if (worst > opt.fit_tol) throw ConvergenceError("scattering: fit residual too large");
    return out;
}

std::vector<std::pair<double, double>> scattering_symbol_normalized(int n, double gamma,
                                                                    const std::vector<double>& lambdas, int steps) {
    if (std::find(lambdas.begin(), lambdas.end(), 0.0) == lambdas.end())
        throw DomainError("scattering_symbol_normalized: lambda grid must contain 0");
    auto ratio = [n, gamma, steps](double l) {
        auto bc = solve_scattering_ode({n, gamma, l}, 1e-4, 1.0 - 1e-4, steps);
        return bc.H / bc.F;
    };
    // one task per lambda; results are collected in grid order
    std::vector<std::future<double>> runs;
    runs.reserve(lambdas.size());
    for (double l : lambdas) runs.push_back(std::async(std::launch::async, ratio, l));
    std::vector<double> hf;
    hf.reserve(lambdas.size());
    for (auto& r : runs) hf.push_back(r.get());
    const double base = hf[std::find(lambdas.begin(), lambdas.end(), 0.0) - lambdas.begin()];
    if (base == 0.0) throw ConvergenceError("scattering_symbol_normalized: (H/F)(0) vanishes");
    std::vector<std::pair<double, double>> out;
    out.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) out.emplace_back(lambdas[i], hf[i] / base);
    return out;
}

}  // namespace hypspec
