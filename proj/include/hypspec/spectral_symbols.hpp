#pragma once

#include <string>
#include <vector>

namespace hypspec {

struct SymbolQuery {
    int n = 3;
    double gamma = 1.0;
    double lambda = 0.0;
};

struct InequalityMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;           // lhs - rhs
    double relative_margin = 0.0;  // margin / max(|lhs|, |rhs|, eps)
};

struct NamedMargin {
    std::string label;
    InequalityMargin value;
};

enum class SymbolKind { P, Ptilde };

InequalityMargin make_margin(double lhs, double rhs);

// margin >= -floor * max(|lhs|, |rhs|, 1)
bool margin_ok(const InequalityMargin& m, double floor = 1e-9);

// 2^{2g} |Gamma((3+2g)/4 + il/2)|^2 / |Gamma((3-2g)/4 + il/2)|^2
double symbol_P(double gamma, double lambda);

// |Gamma(g+1/2+il)|^2 / |Gamma(1/2+il)|^2
double symbol_Ptilde(double gamma, double lambda);

double bottom_constant_P(double gamma);
double bottom_constant_Ptilde(double gamma);

// P - Ptilde - (sin(g pi)/pi) |Gamma(g+1/2+il)|^2
double decomposition_residual(double gamma, double lambda);

// (P(g,l) - P(g,0)) / (l^2 (l^2+1)^{g-1}); throws DomainError at l = 0
double equivalence_ratio(double gamma, double lambda);

// odd n: lhs = P(n/2, l) - P(n/2, 0), rhs = l^2 (l^2 + zeta)^{n/2-1}
InequalityMargin margin_P_halfdim(int n, double lambda, double zeta);
InequalityMargin margin_Ptilde_halfdim(int n, double lambda, double zeta);

// g in [2k, 2k+1], k >= 1: lhs = P(g,l) - P(g,0), rhs = (l sinh(pi l)/pi) |Gamma(g+il)|^2
InequalityMargin margin_even_band(double gamma, double lambda);

// the chain of gamma-ratio and rational inequalities used for 2 <= g <= 3;
// the small-lambda ratio step is included only for l^2 <= 5, the large-lambda step only for l^2 >= 5
std::vector<NamedMargin> gamma_ratio_chain_margins(double gamma, double lambda);

// largest zeta (relative width 1e-6) with margin >= -1e-12 max(lhs, 1) on every grid point
double find_max_zeta(int n, SymbolKind kind, const std::vector<double>& lambda_grid);

}  // namespace hypspec
