#pragma once

#include <complex>

#include "hypspec/errors.hpp"

namespace hypspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct GammaRatioQuery {
    double a_top;
    double a_bot;
    double lambda;
};

// Principal value of log Gamma(z): real part log|Gamma(z)|, imaginary part arg Gamma(z) in (-pi, pi].
cplx log_gamma(cplx z);

// log|Gamma(x)| for real x that is not a pole.
double log_abs_gamma(double x);

// Gamma(x) for real x (sign included). Throws PoleError at nonpositive integers.
double gamma_fn(double x);

// 1/Gamma(z); exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

cplx digamma(cplx z);

// log|Gamma(a + i lambda)|^2, +infinity at a pole (a nonpositive integer, lambda == 0).
double log_abs_gamma_sq(double a, double lambda);

// |Gamma(a + i lambda)|^2. Throws PoleError at a pole.
double abs_gamma_sq(double a, double lambda);

// 1/|Gamma(a + i lambda)|^2, zero at a pole.
double abs_rgamma_sq(double a, double lambda);

// |Gamma(a_top + i l)|^2 / |Gamma(a_bot + i l)|^2 evaluated in log space; a pole in the
// denominator gives 0, a pole in the numerator throws.
double gamma_ratio_sq(const GammaRatioQuery& q);

cplx pochhammer(cplx a, unsigned k);

// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

// Gauss hypergeometric 2F1(a, b; c; z) for real z <= 1.
cplx hyp2f1(cplx a, cplx b, double c, double z);

// 2F1(a, b; c; 1 - w) for w in (0, 2); w is taken as exact so arguments near 1 keep full precision.
cplx hyp2f1_one_minus(cplx a, cplx b, double c, double w);

// Plain power series, complex c allowed. Used directly where the caller knows |z| is small.
cplx hyp2f1_series(cplx a, cplx b, cplx c, double z);

// Associated Legendre function of the first kind, P^mu_nu(x), x > 1.
cplx legendre_p(double mu, cplx nu, double x);

// Same function at x = cosh(rho); avoids the cancellation in x - 1 for small rho.
cplx legendre_p_cosh(double mu, cplx nu, double rho);

}  // namespace hypspec
