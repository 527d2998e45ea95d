#include "hypspec/helgason_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>

#include "hypspec/errors.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

const double kLn2 = std::log(2.0);

double log_sinh(double x) {
    if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
    return std::log(std::sinh(x));
}

void require_dim(int n) {
    if (n < 2) throw DomainError("n must be at least 2");
}

// Term of a balanced gamma product: exp(c) prod Gamma(x+num_i) / prod Gamma(x+den_i), with
// complex shifts entering through Re log Gamma and as many numerator as denominator factors.
struct GammaTerm {
    std::vector<cplx> num, den;
    double log_const = 0.0;

    double log_direct(double x) const {
        double s = log_const;
        for (cplx a : num) s += log_gamma(x + a).real();
        for (cplx a : den) s -= log_gamma(x + a).real();
        return s;
    }

    double exponent() const {
        cplx s = 0.0;
        for (cplx a : num) s += a;
        for (cplx a : den) s -= a;
        return s.real();
    }

    // Stirling: log Gamma(x+a) ~ (x+a-1/2) log x - x + log(2pi)/2 + sum_m (-1)^{m+1} B_{m+1}(a) / (m(m+1) x^m)
    std::vector<double> inverse_power_coeffs(int order) const {
        std::vector<double> e(order + 1, 0.0);
        for (int m = 1; m <= order; ++m) {
            cplx s = 0.0;
            for (cplx a : num) s += bernoulli_poly(m + 1, a);
            for (cplx a : den) s -= bernoulli_poly(m + 1, a);
            e[m] = ((m % 2 == 1) ? 1.0 : -1.0) * s.real() / (m * (m + 1.0));
        }
        return e;
    }

    static cplx bernoulli_poly(int m, cplx a) {
        cplx s = 0.0, ap = 1.0;
        double binom = 1.0;
        // B_m(a) = sum_j C(m, j) B_j a^{m-j}, summed from j = m down
        for (int j = m; j >= 0; --j) {
            s += binom * bernoulli_number(j) * ap;
            ap *= a;
            binom *= static_cast<double>(j) / (m - j + 1);
        }
        return s;
    }

    static double bernoulli_number(int j) {
        if (j == 0) return 1.0;
        if (j == 1) return -0.5;
        if (j % 2 == 1) return 0.0;
        return boost::math::bernoulli_b2n<double>(j / 2);
    }
};

// Sum over k >= 0 of a GammaTerm decaying like k^{-p}, p > 1. Terms are added directly until they
// fall below 1e-15 of the partial sum or k reaches a switch point well inside the asymptotic regime;
// the remainder is the midpoint integral over [K - 1/2, inf) of the Stirling form of the term,
// with its first Euler-Maclaurin correction.
SeriesResult sum_gamma_series(const GammaTerm& term, std::size_t max_terms) {
    constexpr int kOrder = 10;
    const double p = -term.exponent();
    double reach = 1.0;
    for (cplx a : term.num) reach = std::max(reach, std::abs(a));
    for (cplx a : term.den) reach = std::max(reach, std::abs(a));
    const auto switch_k = static_cast<std::size_t>(std::ceil(std::max(2000.0, 60.0 * reach)));
    SeriesResult out;
    double sum = 0.0;
    const std::size_t limit = std::min(max_terms, switch_k);
    for (std::size_t k = 0; k < limit; ++k) {
        double t = std::exp(term.log_direct(static_cast<double>(k)));
        sum += t;
        if (t < 1e-15 * sum && k > 4) {
            out.value = sum;
            out.terms = k + 1;
            out.error = 1e-15 * sum * std::max(1.0, static_cast<double>(k) / std::max(p - 1.0, 1e-3));
            return out;
        }
    }
    if (max_terms < switch_k) throw ConvergenceError("series: term budget exhausted before the asymptotic regime");
    if (!(p > 1.0)) throw ConvergenceError("series: terms decay too slowly to sum");
    const auto e = term.inverse_power_coeffs(kOrder);
    // log t(x) = C - p log x + sum_m e_m x^{-m}; C fixed by matching the direct value at x = K
    auto poly = [&](double x) {
        double s = 0.0, xm = 1.0;
        for (int m = 1; m <= kOrder; ++m) {
            xm /= x;
            s += e[m] * xm;
        }
        return s;
    };
    auto dpoly = [&](double x) {
        double s = 0.0, xm = 1.0 / x;
        for (int m = 1; m <= kOrder; ++m) {
            xm /= x;
            s -= m * e[m] * xm;
        }
        return s;
    };
    const double K = static_cast<double>(switch_k);
    const double C = term.log_direct(K) + p * std::log(K) - poly(K);
    const double x0 = K - 0.5;
    // x = x0 w^{-1/(p-1)} turns the x^{-p} decay into a bounded integrand on (0, 1]
    auto g = [&](double w) {
        if (w <= 0.0) return std::exp(C + (1.0 - p) * std::log(x0)) / (p - 1.0);
        double x = x0 * std::pow(w, -1.0 / (p - 1.0));
        return std::exp(C + (1.0 - p) * std::log(x0) + poly(x)) / (p - 1.0);
    };
    auto r = integrate_adaptive<double>(g, 0.0, 1.0, 0.0, 1e-14, 100000, 2);
    if (!r.converged) throw ConvergenceError("series: tail integral did not converge");
    // midpoint rule: sum_{k>=K} f(k) = int_{K-1/2}^inf f + f'(K-1/2)/24 + ...
    const double f0 = std::exp(C - p * std::log(x0) + poly(x0));
    const double df0 = f0 * (-p / x0 + dpoly(x0));
    const double tail = r.value + df0 / 24.0;
    out.value = sum + tail;
    out.tail = tail;
    out.terms = switch_k;
    out.error = r.error + std::abs(7.0 / 5760.0 * f0 * p * (p + 1) * (p + 2) / (x0 * x0 * x0)) + 1e-15 * out.value;
    return out;
}

}  // namespace

double c_function_inv_sq(double lambda, int n) {
    require_dim(n);
    return std::exp(log_abs_gamma_sq((n - 1) / 2.0, lambda) - kLn2 - n * std::log(2.0 * kPi)) *
           abs_rgamma_sq(0.0, lambda);
}

double c_function_inv_sq_regularized(double lambda, int n) {
    require_dim(n);
    double x = kPi * std::abs(lambda);
    // |Gamma(il)|^{-2} / l^2 = sinh(pi l) / (pi l)
    double shc = x < 1e-8 ? 1.0 + x * x / 6.0 : std::exp(log_sinh(x) - std::log(x));
    return std::exp(log_abs_gamma_sq((n - 1) / 2.0, lambda) - kLn2 - n * std::log(2.0 * kPi)) * shc;
}

double spherical_fn(double lambda, int n, double rho) {
    require_dim(n);
    if (!(rho > 0.0)) throw DomainError("rho must be positive");
    const double mu = (2.0 - n) / 2.0;
    cplx p = legendre_p_cosh(mu, cplx(-0.5, lambda), rho);
    double scale = std::exp((n - 2.0) / 2.0 * kLn2 + log_abs_gamma(n / 2.0) + mu * log_sinh(rho));
    return scale * p.real();
}

double default_rho_max(double decay_exponent, int n, double abs_tol) {
    const double net = decay_exponent - (n - 1) / 2.0;
    if (!(net > 0.0)) throw DomainError("decay exponent must exceed (n-1)/2");
    double r = std::max(40.0, (20.0 + n) * std::max(1.0, 1.0 / net));
    // the integrand tail is bounded by ~ (1+rho) e^{-net rho}
    while ((1.0 + r) * std::exp(-net * r) / net > abs_tol && r < 2000.0) r *= 1.1;
    return r;
}

TransformResult radial_hf_transform(const RadialFunction& f, double lambda, int n, const QuadratureSpec& quad) {
    require_dim(n);
    if (!f.evaluator) throw DomainError("radial_hf_transform: empty evaluator");
    if (!(f.decay_exponent > (n - 1) / 2.0))
        throw DomainError("radial_hf_transform: decay exponent must exceed (n-1)/2");
    if (!(quad.abs_tol > 0.0) || !(quad.rel_tol > 0.0) || quad.max_nodes == 0)
        throw DomainError("radial_hf_transform: invalid quadrature spec");
    TransformResult out;
    out.rho_max = quad.rho_max > 0.0 ? quad.rho_max : default_rho_max(f.decay_exponent, n, quad.abs_tol);
    const double mu = (2.0 - n) / 2.0;
    const cplx nu(-0.5, lambda);
    auto integrand = [&](double rho) {
        if (rho <= 0.0) return 0.0;
        double fv = f.evaluator(rho);
        if (fv == 0.0) return 0.0;
        return fv * std::exp(0.5 * n * log_sinh(rho)) * legendre_p_cosh(mu, nu, rho).real();
    };
    const double split = std::min(1.0, out.rho_max);
    // rho = s^4 on [0, split] softens algebraic behaviour at the origin
    auto inner = [&](double s) {
        double s3 = s * s * s;
        return 4.0 * s3 * integrand(s3 * s);
    };
    const double budget = static_cast<double>(quad.max_nodes);
    auto r1 = integrate_adaptive<double>(inner, 0.0, std::pow(split, 0.25), 0.5 * quad.abs_tol, quad.rel_tol,
                                         quad.max_nodes / 4, 4);
    double value = r1.value, err = r1.error;
    std::size_t evals = r1.evaluations;
    bool ok = r1.converged;
    if (out.rho_max > split) {
        int panels = static_cast<int>(std::ceil((out.rho_max - split) * std::max(1.0, std::abs(lambda)) / 2.0));
        auto r2 = integrate_adaptive<double>(integrand, split, out.rho_max, 0.5 * quad.abs_tol, quad.rel_tol,
                                             static_cast<std::size_t>(budget) - evals, std::max(panels, 4));
        value += r2.value;
        err += r2.error;
        evals += r2.evaluations;
        ok = ok && r2.converged;
    }
    if (!ok) throw ConvergenceError("radial_hf_transform: quadrature did not converge within the node budget");
    const double pref = std::pow(2.0 * kPi, n / 2.0);
    out.value = pref * value;
    out.error = pref * err;
    out.evaluations = evals;
    return out;
}

double hf_K_closed(double nu, double gamma, double lambda) {
    if (!(nu > 0.0)) throw DomainError("hf_K_closed: nu must be positive");
    if (!(gamma > 0.0)) throw DomainError("hf_K_closed: gamma must be positive");
    return gamma_ratio_sq({nu, nu + gamma, lambda});
}

SeriesResult hf_H_series(double nu, double gamma, int n, double lambda, std::size_t max_terms) {
    require_dim(n);
    if (!(nu > 0.0)) throw DomainError("hf_H_series: nu must be positive");
    if (!(gamma >= (n - 1) / 2.0 && gamma <= n / 2.0)) throw DomainError("hf_H_series: need (n-1)/2 <= gamma <= n/2");
    const double d = n / 2.0 - gamma;
    const double a = (n - 1) / 2.0 + nu, b = 0.5 + nu;
    if (d == 0.0) {
        // (0)_k vanishes for k >= 1
        SeriesResult out;
        out.value = std::exp(log_abs_gamma_sq(nu, lambda) - log_abs_gamma(a) - log_abs_gamma(b));
        out.terms = 1;
        return out;
    }
    GammaTerm term;
    term.num = {cplx(nu, lambda), cplx(nu, -lambda), cplx(d)};
    term.den = {cplx(a), cplx(b), cplx(1.0)};
    term.log_const = -log_abs_gamma(d);
    return sum_gamma_series(term, max_terms);
}

double hf_H_series_normalization(int n) {
    require_dim(n);
    return std::pow(4.0 * kPi, n / 2.0);
}

SeriesResult hf_K_series(double nu, double gamma, double lambda, std::size_t max_terms) {
    if (!(nu > 0.0) || !(gamma > 0.0)) throw DomainError("hf_K_series: need nu > 0, gamma > 0");
    GammaTerm term;
    term.num = {cplx(nu, lambda), cplx(nu, -lambda)};
    term.den = {cplx(2.0 * nu + gamma), cplx(1.0)};
    return sum_gamma_series(term, max_terms);
}

double hf_H_upper_bound(double nu, double gamma, int n, double lambda) {
    double l = log_abs_gamma(gamma + 2.0 * nu) + log_abs_gamma(gamma) - log_abs_gamma(nu + (n - 1) / 2.0) -
               log_abs_gamma(nu + 0.5);
    return std::exp(l) * hf_K_closed(nu, gamma, lambda);
}

double legendre_integral_closed(double g, double lambda, int n) {
    require_dim(n);
    if (!(g > n - 1)) throw DomainError("legendre_integral_closed: need g > n-1");
    return std::exp(0.5 * n * kLn2 + log_abs_gamma_sq((g + 1.0 - n) / 2.0, lambda) - log_abs_gamma(g / 2.0) -
                    log_abs_gamma((g + 2.0 - n) / 2.0));
}

}  // namespace hypspec
