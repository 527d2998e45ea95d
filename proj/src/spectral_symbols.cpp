#include "hypspec/spectral_symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypspec/errors.hpp"
#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

const double kLn2 = std::log(2.0);

void require_gamma(double g) {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("gamma must be positive");
}

void require_odd(int n) {
    if (n < 3 || n % 2 == 0) throw DomainError("n must be odd and at least 3");
}

double log_sinh(double x) {
    if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
    return std::log(std::sinh(x));
}

double symbol(SymbolKind k, double g, double l) { return k == SymbolKind::P ? symbol_P(g, l) : symbol_Ptilde(g, l); }

InequalityMargin halfdim(SymbolKind k, int n, double lambda, double zeta) {
    require_odd(n);
    if (!(zeta > 0.0)) throw DomainError("zeta must be positive");
    double g = n / 2.0;
    double lhs = symbol(k, g, lambda) - symbol(k, g, 0.0);
    double l2 = lambda * lambda;
    double rhs = l2 * std::pow(l2 + zeta, g - 1.0);
    return make_margin(lhs, rhs);
}

}  // namespace

InequalityMargin make_margin(double lhs, double rhs) {
    InequalityMargin m;
    m.lhs = lhs;
    m.rhs = rhs;
    m.margin = lhs - rhs;
    double scale = std::max({std::abs(lhs), std::abs(rhs), std::numeric_limits<double>::min()});
    m.relative_margin = m.margin / scale;
    return m;
}

bool margin_ok(const InequalityMargin& m, double floor) {
    return m.margin >= -floor * std::max({std::abs(m.lhs), std::abs(m.rhs), 1.0});
}

double symbol_P(double gamma, double lambda) {
    require_gamma(gamma);
    return std::exp(2.0 * gamma * kLn2) * gamma_ratio_sq({(3.0 + 2.0 * gamma) / 4.0, (3.0 - 2.0 * gamma) / 4.0, lambda / 2.0});
}

double symbol_Ptilde(double gamma, double lambda) {
    require_gamma(gamma);
    return gamma_ratio_sq({gamma + 0.5, 0.5, lambda});
}

double bottom_constant_P(double gamma) { return symbol_P(gamma, 0.0); }

double bottom_constant_Ptilde(double gamma) {
    require_gamma(gamma);
    return std::exp(2.0 * log_abs_gamma(gamma + 0.5)) / kPi;
}

double decomposition_residual(double gamma, double lambda) {
    double p = symbol_P(gamma, lambda);
    double pt = symbol_Ptilde(gamma, lambda);
    return p - pt - sin_pi(gamma) / kPi * abs_gamma_sq(gamma + 0.5, lambda);
}

double equivalence_ratio(double gamma, double lambda) {
    require_gamma(gamma);
    if (lambda == 0.0) throw DomainError("equivalence_ratio: lambda must be nonzero");
    double l2 = lambda * lambda;
    double num = symbol_P(gamma, lambda) - symbol_P(gamma, 0.0);
    return num / (l2 * std::pow(l2 + 1.0, gamma - 1.0));
}

InequalityMargin margin_P_halfdim(int n, double lambda, double zeta) { return halfdim(SymbolKind::P, n, lambda, zeta); }

InequalityMargin margin_Ptilde_halfdim(int n, double lambda, double zeta) {
    return halfdim(SymbolKind::Ptilde, n, lambda, zeta);
}

InequalityMargin margin_even_band(double gamma, double lambda) {
    double k = std::floor(gamma / 2.0);
    if (k < 1.0 || gamma > 2.0 * k + 1.0) throw DomainError("gamma must lie in [2k, 2k+1] with k >= 1");
    double lhs = symbol_P(gamma, lambda) - symbol_P(gamma, 0.0);
    double l = std::abs(lambda);
    double rhs = 0.0;
    if (l > 0.0) rhs = std::exp(std::log(l) + log_sinh(kPi * l) - std::log(kPi) + log_abs_gamma_sq(gamma, l));
    return make_margin(lhs, rhs);
}

std::vector<NamedMargin> gamma_ratio_chain_margins(double gamma, double lambda) {
    if (!(gamma >= 2.0 && gamma <= 3.0)) throw DomainError("gamma must lie in [2, 3]");
    const double l2 = lambda * lambda;
    const double a1 = (gamma - 1.5) * (gamma - 1.5), a2 = (gamma - 3.5) * (gamma - 3.5);
    const double r = (l2 + a1 + a2) / ((l2 + a1) * (l2 + a2));
    const double gap = symbol_P(gamma, lambda) - symbol_P(gamma, 0.0);
    std::vector<NamedMargin> out;
    out.push_back({"gap-vs-weighted-Ptilde", make_margin(gap, l2 * r * symbol_Ptilde(gamma, lambda))});
    out.push_back({"rational-weight-comparison", make_margin(r, (l2 + 1.0) / ((l2 + 0.25) * (l2 + 2.25)))});
    double ratio_top = gamma_ratio_sq({gamma + 0.5, 2.5, lambda});
    out.push_back({"gap-vs-gamma-ratio", make_margin(gap, l2 * (l2 + 1.0) * ratio_top)});
    if (l2 <= 5.0 * (1.0 + 1e-12)) out.push_back({"ratio-monotone-small-lambda", make_margin(ratio_top, gamma_ratio_sq({gamma, 2.0, lambda}))});
    if (l2 >= 5.0 * (1.0 - 1e-12)) {
        double g1 = gamma - 1.0;
        out.push_back({"rational-large-lambda", make_margin(l2 * r * std::sqrt(1.0 + g1 * g1 / l2), 1.0)});
    }
    return out;
}

double find_max_zeta(int n, SymbolKind kind, const std::vector<double>& lambda_grid) {
    require_odd(n);
    if (lambda_grid.empty()) throw DomainError("find_max_zeta: empty lambda grid");
    auto passes = [&](double zeta) {
        for (double l : lambda_grid) {
            InequalityMargin m = halfdim(kind, n, l, zeta);
            if (m.margin < -1e-12 * std::max(m.lhs, 1.0)) return false;
        }
        return true;
    };
    if (!passes(1e-9)) throw ConvergenceError("find_max_zeta: even zeta = 1e-9 fails");
    double lo = 1e-9, hi = 1.0;
    if (passes(hi)) {
        lo = hi;
        while (true) {
            hi = 2.0 * lo;
            if (hi > 1e6) return lo;
            if (!passes(hi)) break;
            lo = hi;
        }
    }
    while (hi - lo > 1e-6 * lo) {
        double mid = 0.5 * (lo + hi);
        if (passes(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

}  // namespace hypspec
