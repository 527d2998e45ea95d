#pragma once

namespace hypspec {

// 2^{2g} pi^g Gamma((n+2g)/2)/Gamma((n-2g)/2) (Gamma(n/2)/Gamma(n))^{2g/n}, 0 < g < n/2
double sobolev_constant(int n, double gamma);

// pi^{l/2} Gamma(n/2-l/2)/Gamma(n-l/2) (Gamma(n/2)/Gamma(n))^{-1+l/n}, 0 < l < n
double hls_constant(int n, double lambda_exp);

// Gamma(n/2-g)/(2^n pi^{n/2} Gamma(g)) 2^{n-2g} C_{n,n-2g} - 1/S_{n,g}, (n-1)/2 <= g < n/2
double duality_residual(int n, double gamma);

// (n/|S^{n-1}|) [pi^{n/2} 2^m Gamma(m/2)/Gamma((n-m)/2)]^{n/(n-m)}, 0 < m < n
double adams_constant(int n, double m);

// prod_{i<=k} (2i-1)^2/4 - Gamma(k+1/2)^2/pi
double gjms_bottom_integer_check(int k);
double gjms_bottom_product(int k);

}  // namespace hypspec
