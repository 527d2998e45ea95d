#include "hypspec/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hypspec/quadrature.hpp"

namespace hypspec {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kSeriesBudget = 1000000;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_pole(cplx z) { return z.imag() == 0.0 && is_nonpositive_integer(z.real()); }

double wrap_angle(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    return r <= -kPi ? r + 2.0 * kPi : r;
}

// log Gamma for Re z >= 1/2 (branch not normalized)
cplx lanczos_log_gamma(cplx z) {
    cplx zm1 = z - 1.0;
    cplx sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (zm1 + double(k));
    cplx t = zm1 + kLanczosG + 0.5;
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

double lanczos_log_gamma_real(double x) {
    double xm1 = x - 1.0;
    double sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (xm1 + double(k));
    double t = xm1 + kLanczosG + 0.5;
    return kHalfLog2Pi + (xm1 + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z), overflow-safe for large |Im z|
cplx log_sin_pi(cplx z) {
    double x = std::remainder(z.real(), 2.0), y = z.imag();
    if (std::abs(y) < 5.0) {
        cplx s(sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y));
        return std::log(s);
    }
    const double ln2 = std::log(2.0);
    if (y > 0) {
        cplx tail = std::exp(cplx(-2.0 * kPi * y, 2.0 * kPi * x));
        return cplx(-ln2 + kPi * y, kPi * (0.5 - x)) + std::log(1.0 - tail);
    }
    cplx tail = std::exp(cplx(2.0 * kPi * y, -2.0 * kPi * x));
    return cplx(-ln2 - kPi * y, kPi * (x - 0.5)) + std::log(1.0 - tail);
}

// log(sin^2(pi a) + sinh^2(pi l)) = log|sin(pi (a + i l))|^2
double log_abs_sin_pi_sq(double a, double l) {
    double s = sin_pi(a);
    double x = kPi * std::abs(l);
    if (x > 20.0) {
        double e = std::exp(-2.0 * x);
        return 2.0 * x - 2.0 * std::log(2.0) + std::log1p(-2.0 * e + e * e + 4.0 * s * s * e);
    }
    double sh = std::sinh(x);
    return std::log(s * s + sh * sh);
}

// (1 - z)^(-a) style powers of a positive real base
cplx rpow(double base, cplx expo) { return std::exp(expo * std::log(base)); }

bool terminates(cplx a) { return a.imag() == 0.0 && is_nonpositive_integer(a.real()); }

// max_term, when given, receives the largest term modulus; its ratio to |sum| measures cancellation
cplx series_impl(cplx a, cplx b, cplx c, double z, double* max_term = nullptr) {
    cplx term = 1.0, sum = 1.0;
    int small = 0;
    double big = 1.0;
    if (max_term) *max_term = 1.0;
    for (int k = 0; k < kSeriesBudget; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
        if (max_term) *max_term = big = std::max(big, std::abs(term));
        if (term == 0.0) return sum;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small == 3) return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series budget exhausted");
}

// 2F1(a, a + ... ) at 1 - w with c - a - b = m a nonnegative integer (logarithmic case)
cplx connection_integer(cplx a, cplx b, double c, double w, int m) {
    cplx ga_b_m = std::exp(log_gamma(cplx(c)));  // Gamma(a + b + m) = Gamma(c)
    cplx first = 0.0;
    if (m > 0) {
        cplx pref = std::exp(log_abs_gamma(double(m))) * ga_b_m * rgamma(a + double(m)) * rgamma(b + double(m));
        cplx term = 1.0, acc = 1.0;
        for (int k = 0; k + 1 < m; ++k) {
            term *= (a + double(k)) * (b + double(k)) / (double(k + 1) * double(1 - m + k)) * w;
            acc += term;
        }
        first = pref * acc;
    }
    // second piece
    cplx pref2 = ga_b_m * rgamma(a) * rgamma(b) * ((m % 2 == 0) ? 1.0 : -1.0) * std::pow(w, m);
    double logw = std::log(w);
    double fact_m = std::exp(log_abs_gamma(double(m + 1)));
    cplx coef = 1.0 / fact_m;
    double psi_k1 = -kEulerGamma;  // psi(k + 1)
    double psi_km1 = std::real(digamma(cplx(double(m + 1))));
    cplx psi_a = digamma(a + double(m));
    cplx psi_b = digamma(b + double(m));
    cplx sum = 0.0;
    int small = 0;
    double wk = 1.0;
    for (int k = 0; k < kSeriesBudget; ++k) {
        cplx term = coef * wk * (logw - psi_k1 - psi_km1 + psi_a + psi_b);
        sum += term;
        if (coef == 0.0) break;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small == 3) break;
        } else {
            small = 0;
        }
        cplx am = a + double(m + k), bm = b + double(m + k);
        coef *= am * bm / (double(k + 1) * double(k + 1 + m));
        psi_a += 1.0 / am;
        psi_b += 1.0 / bm;
        psi_k1 += 1.0 / double(k + 1);
        psi_km1 += 1.0 / double(k + 1 + m);
        wk *= w;
        if (k + 1 == kSeriesBudget) throw ConvergenceError("hyp2f1: log-case budget exhausted");
    }
    return first - pref2 * sum;
}

cplx one_minus_impl(cplx a, cplx b, double c, double w) {
    if (w >= 0.5) return series_impl(a, b, c, 1.0 - w);
    if (terminates(a) || terminates(b)) return series_impl(a, b, c, 1.0 - w);
    cplx m = cplx(c) - a - b;
    double mr = std::round(m.real());
    double dist = std::abs(m - mr);
    if (dist <= 1e-12 * std::max(1.0, std::abs(m))) {
        int mi = int(mr);
        if (mi >= 0) return connection_integer(a, b, c, w, mi);
        // Euler transform flips the sign of m
        return std::pow(w, mi) * connection_integer(c - a, c - b, c, w, -mi);
    }
    cplx lgc = log_gamma(cplx(c));
    cplx t1 = std::exp(lgc + log_gamma(m)) * rgamma(c - a) * rgamma(c - b) * series_impl(a, b, 1.0 - m, w);
    cplx t2 = std::exp(lgc + log_gamma(-m) + m * std::log(w)) * rgamma(a) * rgamma(b) *
              series_impl(cplx(c) - a, cplx(c) - b, 1.0 + m, w);
    return t1 + t2;
}

void check_c(double c) {
    if (is_nonpositive_integer(c)) throw PoleError("hyp2f1: c is a nonpositive integer");
}

}  // namespace

double sin_pi(double x) {
    if (x == std::floor(x)) return 0.0;
    double r = std::remainder(x, 2.0);
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    double r = std::remainder(x, 2.0);  // [-1, 1]
    if (std::abs(r) == 0.5) return 0.0;
    return sin_pi(r + 0.5);
}

cplx log_gamma(cplx z) {
    if (is_pole(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    cplx r;
    if (z.real() >= 0.5) {
        r = lanczos_log_gamma(z);
    } else {
        r = kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    }
    return cplx(r.real(), wrap_angle(r.imag()));
}

double log_abs_gamma(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("log_abs_gamma: pole at nonpositive integer");
    if (x >= 0.5) return lanczos_log_gamma_real(x);
    return kLogPi - std::log(std::abs(sin_pi(x))) - lanczos_log_gamma_real(1.0 - x);
}

double gamma_fn(double x) {
    double v = std::exp(log_abs_gamma(x));
    if (x < 0.0 && sin_pi(x) < 0.0) v = -v;
    return v;
}

cplx rgamma(cplx z) {
    if (is_pole(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
    if (is_pole(z)) throw PoleError("digamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        cplx w = kPi * cplx(std::remainder(z.real(), 1.0), z.imag());
        cplx cot;
        if (w.imag() > 20.0) cot = cplx(0.0, -1.0);
        else if (w.imag() < -20.0) cot = cplx(0.0, 1.0);
        else cot = std::cos(w) / std::sin(w);
        return digamma(1.0 - z) - kPi * cot;
    }
    cplx acc = 0.0;
    while (std::abs(z) < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx iz2 = 1.0 / (z * z);
    cplx tail = iz2 * (-1.0 / 12 + iz2 * (1.0 / 120 + iz2 * (-1.0 / 252 + iz2 * (1.0 / 240 +
                iz2 * (-1.0 / 132 + iz2 * (691.0 / 32760 + iz2 * (-1.0 / 12)))))));
    return acc + std::log(z) - 0.5 / z + tail;
}

double log_abs_gamma_sq(double a, double lambda) {
    if (a >= 0.5) return 2.0 * lanczos_log_gamma(cplx(a, lambda)).real();
    if (lambda == 0.0 && is_nonpositive_integer(a)) return std::numeric_limits<double>::infinity();
    // |Gamma(a+il)|^2 = pi^2 / (|sin pi(a+il)|^2 |Gamma(1-a+il)|^2)
    return 2.0 * kLogPi - log_abs_sin_pi_sq(a, lambda) - 2.0 * lanczos_log_gamma(cplx(1.0 - a, lambda)).real();
}

double abs_gamma_sq(double a, double lambda) {
    if (lambda == 0.0 && is_nonpositive_integer(a)) throw PoleError("abs_gamma_sq: pole");
    return std::exp(log_abs_gamma_sq(a, lambda));
}

double abs_rgamma_sq(double a, double lambda) { return std::exp(-log_abs_gamma_sq(a, lambda)); }

double gamma_ratio_sq(const GammaRatioQuery& q) {
    if (q.lambda == 0.0 && is_nonpositive_integer(q.a_top)) throw PoleError("gamma_ratio_sq: numerator pole");
    if (q.lambda == 0.0 && is_nonpositive_integer(q.a_bot)) return 0.0;
    return std::exp(log_abs_gamma_sq(q.a_top, q.lambda) - log_abs_gamma_sq(q.a_bot, q.lambda));
}

cplx pochhammer(cplx a, unsigned k) {
    cplx p = 1.0;
    for (unsigned j = 0; j < k; ++j) p *= a + double(j);
    return p;
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, double z) { return series_impl(a, b, c, z); }

cplx hyp2f1_one_minus(cplx a, cplx b, double c, double w) {
    check_c(c);
    if (!(w > 0.0 && w < 2.0)) throw DomainError("hyp2f1_one_minus: w must lie in (0, 2)");
    return one_minus_impl(a, b, c, w);
}

cplx hyp2f1(cplx a, cplx b, double c, double z) {
    check_c(c);
    if (!(z <= 1.0)) throw DomainError("hyp2f1: z must be <= 1");
    if (z == 0.0) return 1.0;
    if (terminates(a) || terminates(b)) return series_impl(a, b, c, z);
    if (z == 1.0) {
        cplx m = cplx(c) - a - b;
        if (!(m.real() > 0.0)) throw DomainError("hyp2f1: divergent at z = 1 unless Re(c-a-b) > 0");
        return std::exp(log_gamma(cplx(c)) + log_gamma(m)) * rgamma(c - a) * rgamma(c - b);
    }
    if (std::abs(z) <= 0.5) return series_impl(a, b, c, z);
    if (z > 0.5) return one_minus_impl(a, b, c, 1.0 - z);
    // Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
    cplx pf = rpow(1.0 - z, -a);
    double zz = z / (z - 1.0);
    if (zz <= 0.5) return pf * series_impl(a, cplx(c) - b, c, zz);
    return pf * one_minus_impl(a, cplx(c) - b, c, 1.0 / (1.0 - z));
}

namespace {

// P^mu_nu through the Mehler-Dirichlet integral, valid for mu < 1/2; uniform in nu
cplx legendre_mehler(double mu, cplx nu, double rho) {
    const double e = -mu - 0.5;
    const cplx k = nu + 0.5;
    auto g = [&](double s) -> cplx {
        // Kronrod nodes are interior, so s > 0 here
        double s2 = s * s;
        double tail = -std::expm1(-(2.0 * rho - s2));
        double scale = std::exp(-e * s2 / 2.0) * std::pow(tail, e) * std::pow(std::sinh(s2 / 2.0), e);
        return 2.0 * s * std::cosh(k * (rho - s2)) * scale;
    };
    auto r = integrate_adaptive<cplx>(g, 0.0, std::sqrt(rho), 0.0, 1e-14, 400000, 8);
    if (!r.converged && r.error > 1e-10 * std::abs(r.value))
        throw ConvergenceError("legendre_p: Mehler quadrature did not converge");
    double log_sinh = rho > 20.0 ? rho + std::log1p(-std::exp(-2.0 * rho)) - std::log(2.0) : std::log(std::sinh(rho));
    double pref = std::sqrt(2.0 / kPi) * std::exp(mu * log_sinh + e * rho - log_abs_gamma(0.5 - mu));
    return pref * r.value;
}

cplx legendre_core(double mu, cplx nu, double sh2, double ch2, double rho) {
    if (is_nonpositive_integer(1.0 - mu)) throw PoleError("legendre_p: 1 - mu is a gamma pole");
    const double t = sh2 / ch2;
    const cplx a = -nu, b = -mu - nu;
    const double c = 1.0 - mu;
    cplx pref = std::exp(-log_gamma(cplx(c)) + 0.5 * mu * std::log(ch2 / sh2) + nu * std::log(ch2));
    if (t <= 0.75) {
        double big;
        cplx f = series_impl(a, b, c, t, &big);
        // large |nu| makes the terms swell before they decay; beyond ~3 lost digits switch route
        if (big <= 1e3 * std::abs(f) || mu >= 0.5) return pref * f;
        return legendre_mehler(mu, nu, rho);
    }
    cplx m = 1.0 + 2.0 * nu;
    double dist = std::abs(m - std::round(m.real()));
    if (dist >= 0.25 || mu >= 0.5 || terminates(a) || terminates(b))
        return pref * one_minus_impl(a, b, c, 1.0 / ch2);
    return legendre_mehler(mu, nu, rho);
}

}  // namespace

cplx legendre_p_cosh(double mu, cplx nu, double rho) {
    if (!(rho > 0.0)) throw DomainError("legendre_p: rho must be positive");
    double sh = std::sinh(0.5 * rho), ch = std::cosh(0.5 * rho);
    return legendre_core(mu, nu, sh * sh, ch * ch, rho);
}

cplx legendre_p(double mu, cplx nu, double x) {
    if (!(x > 1.0)) throw DomainError("legendre_p: x must exceed 1");
    double xm1 = x - 1.0;
    double rho = std::log1p(xm1 + std::sqrt(xm1 * (x + 1.0)));
    return legendre_core(mu, nu, 0.5 * xm1, 0.5 * (x + 1.0), rho);
}

}  // namespace hypspec
