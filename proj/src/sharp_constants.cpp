#include "hypspec/sharp_constants.hpp"

#include <cmath>

#include "hypspec/errors.hpp"
#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

const double kLogPi = std::log(kPi);
const double kLn2 = std::log(2.0);

double lg(double x) { return log_abs_gamma(x); }

void require_dim(int n) {
    if (n < 2) throw DomainError("n must be at least 2");
}

double log_sobolev(int n, double g) {
    return 2.0 * g * kLn2 + g * kLogPi + lg((n + 2.0 * g) / 2.0) - lg((n - 2.0 * g) / 2.0) +
           (2.0 * g / n) * (lg(n / 2.0) - lg(n));
}

double log_hls(int n, double l) {
    return 0.5 * l * kLogPi + lg((n - l) / 2.0) - lg(n - l / 2.0) + (-1.0 + l / n) * (lg(n / 2.0) - lg(n));
}

}  // namespace

double sobolev_constant(int n, double gamma) {
    require_dim(n);
    if (!(gamma > 0.0 && gamma < n / 2.0)) throw DomainError("sobolev_constant: need 0 < gamma < n/2");
    return std::exp(log_sobolev(n, gamma));
}

double hls_constant(int n, double lambda_exp) {
    require_dim(n);
    if (!(lambda_exp > 0.0 && lambda_exp < n)) throw DomainError("hls_constant: need 0 < lambda < n");
    return std::exp(log_hls(n, lambda_exp));
}

double duality_residual(int n, double gamma) {
    require_dim(n);
    if (!(gamma >= (n - 1) / 2.0 && gamma < n / 2.0)) throw DomainError("duality_residual: need (n-1)/2 <= gamma < n/2");
    double log_lhs = lg(n / 2.0 - gamma) - n * kLn2 - 0.5 * n * kLogPi - lg(gamma) + (n - 2.0 * gamma) * kLn2 +
                     log_hls(n, n - 2.0 * gamma);
    double inv_s = std::exp(-log_sobolev(n, gamma));
    return inv_s * std::expm1(log_lhs + log_sobolev(n, gamma));
}

double adams_constant(int n, double m) {
    require_dim(n);
    if (!(m > 0.0 && m < n)) throw DomainError("adams_constant: need 0 < m < n");
    double log_area = kLn2 + 0.5 * n * kLogPi - lg(n / 2.0);
    double inner = 0.5 * n * kLogPi + m * kLn2 + lg(m / 2.0) - lg((n - m) / 2.0);
    return std::exp(std::log(static_cast<double>(n)) - log_area + inner * n / (n - m));
}

double gjms_bottom_product(int k) {
    if (k < 1) throw DomainError("k must be positive");
    double p = 1.0;
    for (int i = 1; i <= k; ++i) p *= (2.0 * i - 1.0) * (2.0 * i - 1.0) / 4.0;
    return p;
}

double gjms_bottom_integer_check(int k) {
    double p = gjms_bottom_product(k);
    return p - std::exp(2.0 * lg(k + 0.5) - kLogPi);
}

}  // namespace hypspec
