#include "hypspec/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "hypspec/errors.hpp"
#include "hypspec/green_kernels.hpp"
#include "hypspec/report.hpp"
#include "hypspec/scattering_ode.hpp"
#include "hypspec/sharp_constants.hpp"
#include "hypspec/special_functions.hpp"
#include "hypspec/spectral_symbols.hpp"

namespace hypspec {

namespace {

using Inputs = std::vector<std::pair<std::string, double>>;

struct Outcome {
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 0.0;  // relative cases: 0 means |rhs|
};

struct Job {
    Inputs inputs;
    CaseKind kind;
    double tol;
    std::function<Outcome()> eval;
};

using Builder = std::function<std::vector<Job>(const EffectiveConfig&)>;

struct SuiteDef {
    SuiteInfo info;
    std::vector<int> dims;
    GridSpec gammas;
    GridSpec lambdas;
    Builder build;
};

GridSpec list(std::vector<double> v) {
    GridSpec g;
    g.points = std::move(v);
    return g;
}

GridSpec linear(double a, double b, int count) {
    GridSpec g;
    g.start = a;
    g.stop = b;
    g.count = count;
    return g;
}

double tol_or(const EffectiveConfig& c, double fallback) { return c.tol_rel.value_or(fallback); }

Job rel_job(Inputs in, double tol, std::function<Outcome()> f) { return {std::move(in), CaseKind::relative, tol, std::move(f)}; }

Job margin_job(Inputs in, const EffectiveConfig& c, std::function<Outcome()> f) {
    return {std::move(in), CaseKind::margin, c.tol_margin, std::move(f)};
}

RadialFunction kernel_K_fn(KernelParams p) {
    return {[p](double rho) { return kernel_K(p, rho); }, (p.n - 1) / 2.0 + p.nu};
}

RadialFunction kernel_H_fn(KernelParams p) {
    return {[p](double rho) { return kernel_H(p, rho); }, (p.n - 1) / 2.0 + p.nu};
}

std::vector<double> random_ball_point(std::mt19937& rng, int n, double rmax) {
    std::normal_distribution<double> N;
    std::uniform_real_distribution<double> U(0, 1);
    std::vector<double> x(n);
    double s = 0;
    for (auto& v : x) {
        v = N(rng);
        s += v * v;
    }
    double r = rmax * std::pow(U(rng), 1.0 / n) / std::sqrt(s);
    for (auto& v : x) v *= r;
    return x;
}

std::vector<double> random_halfspace_point(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> U(-2, 2);
    std::vector<double> x(n);
    for (auto& v : x) v = U(rng);
    x[0] = std::exp(U(rng));
    return x;
}

constexpr int kPairs = 100;

// ---- suite builders ----

std::vector<Job> transform_K(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int n : c.dims)
        for (double nu : {0.5, 1.0, 2.0})
            for (double g : c.gammas)
                for (double l : c.lambdas) {
                    KernelParams p{nu, g, n};
                    auto q = c.quadrature;
                    out.push_back(rel_job({{"n", n}, {"nu", nu}, {"gamma", g}, {"lambda", l}}, tol_or(c, 1e-6), [p, l, q] {
                        return Outcome{radial_hf_transform(kernel_K_fn(p), l, p.n, q).value, hf_K_closed(p.nu, p.gamma, l)};
                    }));
                }
    return out;
}

std::vector<Job> transform_H(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int n : c.dims)
        for (double nu : {0.5, 1.0})
            for (double g : c.gammas) {
                if (g < (n - 1) / 2.0 || g >= n / 2.0) continue;
                for (double l : c.lambdas) {
                    KernelParams p{nu, g, n};
                    auto q = c.quadrature;
                    out.push_back(rel_job({{"n", n}, {"nu", nu}, {"gamma", g}, {"lambda", l}}, tol_or(c, 1e-5), [p, l, q] {
                        double t = radial_hf_transform(kernel_H_fn(p), l, p.n, q).value;
                        return Outcome{t / hf_H_series_normalization(p.n), hf_H_series(p.nu, p.gamma, p.n, l).value};
                    }));
                }
            }
    return out;
}

std::vector<Job> legendre_integral(const EffectiveConfig& c) {
    std::vector<Job> out;
    struct T {
        double g, l;
        int n;
    };
    for (T t : {T{3.0, 0.5, 3}, T{4.5, 2.0, 3}, T{4.0, 1.0, 4}}) {
        auto q = c.quadrature;
        out.push_back(rel_job({{"g", t.g}, {"lambda", t.l}, {"n", t.n}}, tol_or(c, 1e-6), [t, q] {
            double g = t.g;
            RadialFunction f{[g](double rho) { return std::pow(std::cosh(rho / 2), -g); }, g / 2};
            double v = radial_hf_transform(f, t.l, t.n, q).value / std::pow(2 * kPi, t.n / 2.0);
            return Outcome{v, legendre_integral_closed(t.g, t.l, t.n)};
        }));
    }
    return out;
}

std::vector<Job> decomposition(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (double g : c.gammas)
        for (double l : c.lambdas)
            out.push_back(rel_job({{"gamma", g}, {"lambda", l}}, tol_or(c, 1e-10), [g, l] {
                double p = symbol_P(g, l);
                double r = decomposition_residual(g, l);
                // where P vanishes the cancelling terms set the scale
                double scale = p > 0 ? p : std::max(symbol_Ptilde(g, l), 1e-300);
                return Outcome{p, p - r, scale};
            }));
    return out;
}

std::vector<Job> bottom_constants(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int k = 1; k <= 7; ++k) {
        out.push_back(rel_job({{"k", k}, {"form", 0}}, tol_or(c, 1e-12), [k] {
            double prod = gjms_bottom_product(k);
            return Outcome{prod - gjms_bottom_integer_check(k), prod};
        }));
        out.push_back(rel_job({{"k", k}, {"form", 1}}, tol_or(c, 1e-12),
                              [k] { return Outcome{bottom_constant_P(k), gjms_bottom_product(k)}; }));
        out.push_back(rel_job({{"k", k}, {"form", 2}}, tol_or(c, 1e-12),
                              [k] { return Outcome{bottom_constant_Ptilde(k), gjms_bottom_product(k)}; }));
    }
    return out;
}

double integer_product(int k, double l) {
    double prod = 1;
    for (int j = 1; j <= k; ++j) prod *= (j - 0.5) * (j - 0.5) + l * l;
    return prod;
}

std::vector<Job> integer_symbols(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int k = 1; k <= 4; ++k)
        for (double l : c.lambdas) {
            out.push_back(rel_job({{"k", k}, {"lambda", l}, {"form", 0}}, tol_or(c, 1e-12),
                                  [k, l] { return Outcome{symbol_P(k, l), integer_product(k, l)}; }));
            out.push_back(rel_job({{"k", k}, {"lambda", l}, {"form", 1}}, tol_or(c, 1e-12),
                                  [k, l] { return Outcome{symbol_Ptilde(k, l), integer_product(k, l)}; }));
        }
    return out;
}

std::vector<Job> equivalence(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (double g : c.gammas) {
        for (double l : c.lambdas) {
            if (l == 0.0) continue;
            // finite and positive
            out.push_back(margin_job({{"gamma", g}, {"lambda", l}, {"check", 0}}, c, [g, l] {
                double r = equivalence_ratio(g, l);
                if (!std::isfinite(r)) throw ConvergenceError("equivalence ratio is not finite");
                return Outcome{r, 0.0};
            }));
        }
        // large-lambda stabilization: ratio(100) / ratio(10) in [0.5, 2]
        out.push_back(margin_job({{"gamma", g}, {"lambda", 100}, {"check", 1}}, c, [g] {
            double q = equivalence_ratio(g, 100) / equivalence_ratio(g, 10);
            return Outcome{std::min(q - 0.5, 2.0 - q), 0.0};
        }));
    }
    return out;
}

std::vector<Job> halfdim(const EffectiveConfig& c, SymbolKind kind) {
    std::vector<Job> out;
    for (int n : c.dims) {
        if (n < 3 || n % 2 == 0) continue;
        // n = 5 uses the largest zeta that passes on the grid, the others zeta = 1
        double zeta = 1.0;
        if (n == 5) zeta = find_max_zeta(n, kind, c.lambdas);
        for (double l : c.lambdas)
            out.push_back(margin_job({{"n", n}, {"zeta", zeta}, {"lambda", l}}, c, [n, l, zeta, kind] {
                auto m = kind == SymbolKind::P ? margin_P_halfdim(n, l, zeta) : margin_Ptilde_halfdim(n, l, zeta);
                return Outcome{m.lhs, m.rhs};
            }));
    }
    return out;
}

std::vector<Job> even_band(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (double g : c.gammas)
        for (double l : c.lambdas)
            out.push_back(margin_job({{"gamma", g}, {"lambda", l}}, c, [g, l] {
                auto m = margin_even_band(g, l);
                return Outcome{m.lhs, m.rhs};
            }));
    return out;
}

std::vector<Job> ratio_chain(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (double g : c.gammas)
        for (double l : c.lambdas) {
            auto steps = gamma_ratio_chain_margins(g, l);
            for (std::size_t s = 0; s < steps.size(); ++s) {
                auto m = steps[s].value;
                out.push_back(margin_job({{"gamma", g}, {"lambda", l}, {"step", static_cast<double>(s)}}, c,
                                         [m] { return Outcome{m.lhs, m.rhs}; }));
            }
        }
    return out;
}

std::vector<Job> h_kernel_differential(const EffectiveConfig& c) {
    std::vector<Job> out;
    const auto rhos = expand(parse_grid("0.1:10:20:geometric"));
    for (int n : c.dims) {
        std::vector<double> gs;
        if (c.gammas.empty())
            for (int j = 0; j < 5; ++j) gs.push_back((n - 1) / 2.0 + 0.1 * j);
        else
            for (double g : c.gammas)
                if (g >= (n - 1) / 2.0 && g < n / 2.0) gs.push_back(g);
        for (double g : gs)
            for (double rho : rhos)
                out.push_back(rel_job({{"n", n}, {"gamma", g}, {"rho", rho}}, tol_or(c, 1e-5), [n, g, rho] {
                    auto r = h_kernel_differential_residual(g, n, rho);
                    return Outcome{r.lhs, r.rhs, r.scale};
                }));
    }
    return out;
}

std::vector<Job> conformal_green(const EffectiveConfig& c, bool ball) {
    std::vector<Job> out;
    std::mt19937 rng(ball ? 11 : 13);
    for (int n : c.dims)
        for (double g : c.gammas)
            for (int i = 0; i < kPairs; ++i) {
                auto x = ball ? random_ball_point(rng, n, 0.97) : random_halfspace_point(rng, n);
                auto y = ball ? random_ball_point(rng, n, 0.97) : random_halfspace_point(rng, n);
                out.push_back(rel_job({{"n", n}, {"gamma", g}, {"pair", i}}, tol_or(c, 1e-9), [=] {
                    if (ball) {
                        double xx = 0, yy = 0;
                        for (int k = 0; k < n; ++k) {
                            xx += x[k] * x[k];
                            yy += y[k] * y[k];
                        }
                        double want = std::pow(2.0, n - 2 * g) * std::pow((1 - xx) * (1 - yy), g - n / 2.0) *
                                      kernel_K({0.5, g, n}, distance_ball(x, y));
                        return Outcome{green_ball(g, n, x, y), want};
                    }
                    double want = std::pow(x[0] * y[0], g - n / 2.0) * kernel_K({0.5, g, n}, distance_halfspace(x, y));
                    return Outcome{green_halfspace(g, n, x, y), want};
                }));
            }
    return out;
}

std::vector<Job> image_charge(const EffectiveConfig& c) {
    std::vector<Job> out;
    std::mt19937 rng(17);
    for (int i = 0; i < kPairs; ++i) {
        auto x = random_halfspace_point(rng, 3), y = random_halfspace_point(rng, 3);
        out.push_back(rel_job({{"pair", i}}, tol_or(c, 1e-10), [x, y] {
            double d = std::hypot(x[0] - y[0], x[1] - y[1], x[2] - y[2]);
            double ds = std::hypot(x[0] + y[0], x[1] - y[1], x[2] - y[2]);
            return Outcome{green_halfspace(1, 3, x, y), (1 / d - 1 / ds) / (4 * kPi)};
        }));
    }
    return out;
}

std::vector<Job> constants_duality(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int n = 3; n <= 9; ++n)
        for (int i = 0; i < 20; ++i) {
            double g = (n - 1) / 2.0 + 0.5 * i / 20;
            out.push_back(rel_job({{"check", 0}, {"n", n}, {"order", g}}, tol_or(c, 1e-12), [n, g] {
                double inv_s = 1 / sobolev_constant(n, g);
                return Outcome{inv_s + duality_residual(n, g), inv_s};
            }));
        }
    out.push_back(rel_job({{"check", 1}, {"n", 3}, {"order", 1}}, tol_or(c, 1e-12),
                          [] { return Outcome{sobolev_constant(3, 1), 3 * std::pow(kPi / 2, 4.0 / 3)}; }));
    out.push_back(rel_job({{"check", 2}, {"n", 3}, {"order", 1.5}}, tol_or(c, 1e-12),
                          [] { return Outcome{adams_constant(3, 1.5), 6 * kPi * kPi}; }));
    out.push_back(rel_job({{"check", 2}, {"n", 4}, {"order", 2}}, tol_or(c, 1e-12),
                          [] { return Outcome{adams_constant(4, 2), 32 * kPi * kPi}; }));
    return out;
}

std::vector<Job> scattering(const EffectiveConfig& c, bool default_pairs) {
    std::vector<std::pair<int, double>> pairs;
    if (default_pairs) pairs = {{3, 0.5}, {3, 1.3}, {4, 0.7}, {5, 2.2}};
    else
        for (int n : c.dims)
            for (double g : c.gammas)
                if (g > 0 && g < n / 2.0) pairs.emplace_back(n, g);
    std::vector<Job> out;
    for (auto [n, g] : pairs)
        for (double l : c.lambdas) {
            if (l == 0.0) continue;
            out.push_back(rel_job({{"n", n}, {"gamma", g}, {"lambda", l}}, tol_or(c, 1e-4), [n, g, l] {
                auto v = scattering_symbol_normalized(n, g, {0.0, l});
                return Outcome{v[1].second, symbol_P(g, l) / symbol_P(g, 0)};
            }));
        }
    return out;
}

std::vector<Job> gamma_closed_forms(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (double l : c.lambdas) {
        if (l == 0.0) continue;
        double sh = std::sinh(kPi * l), ch = std::cosh(kPi * l);
        out.push_back(rel_job({{"a", 0}, {"lambda", l}}, tol_or(c, 1e-12),
                              [l, sh] { return Outcome{abs_gamma_sq(0.0, l), kPi / (l * sh)}; }));
        out.push_back(rel_job({{"a", 0.5}, {"lambda", l}}, tol_or(c, 1e-12),
                              [l, ch] { return Outcome{abs_gamma_sq(0.5, l), kPi / ch}; }));
        for (int k = 1; k <= 4; ++k) {
            out.push_back(rel_job({{"a", k + 1.0}, {"lambda", l}}, tol_or(c, 1e-12), [k, l, sh] {
                double p = kPi * l / sh;
                for (int j = 1; j <= k; ++j) p *= j * j + l * l;
                return Outcome{abs_gamma_sq(k + 1.0, l), p};
            }));
            out.push_back(rel_job({{"a", k + 0.5}, {"lambda", l}}, tol_or(c, 1e-12), [k, l, ch] {
                double p = kPi / ch;
                for (int j = 1; j <= k; ++j) p *= (j - 0.5) * (j - 0.5) + l * l;
                return Outcome{abs_gamma_sq(k + 0.5, l), p};
            }));
        }
    }
    // |Gamma(a+il)| e^{pi l/2} l^{1/2-a} / sqrt(2 pi) -> 1
    for (double a : {0.25, 0.5, 1.0, 1.5})
        out.push_back(rel_job({{"a", a}, {"lambda", 50}}, tol_or(c, 1e-3), [a] {
            double l = 50;
            double v = std::sqrt(abs_gamma_sq(a, l)) * std::exp(kPi * l / 2) * std::pow(l, 0.5 - a) / std::sqrt(2 * kPi);
            return Outcome{v, 1.0};
        }));
    return out;
}

std::vector<Job> kernel_asymptotics(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int n : c.dims)
        for (double nu : {0.5, 1.0, 2.0})
            for (double g : c.gammas) {
                if (g >= n / 2.0) continue;
                KernelParams p{nu, g, n};
                // rho -> 0: K / rho^{2g-n} -> 2^{n-2g} Gamma(2nu+g) Gamma(n/2-g) / (Gamma(nu+(n-1)/2) Gamma(nu+1/2)) C
                out.push_back(rel_job({{"n", n}, {"nu", nu}, {"gamma", g}, {"end", 0}}, tol_or(c, 1e-4), [p] {
                    double lim = std::pow(2.0, p.n - 2 * p.gamma) *
                                 std::exp(log_abs_gamma(2 * p.nu + p.gamma) + log_abs_gamma(p.n / 2.0 - p.gamma) -
                                          log_abs_gamma(p.nu + (p.n - 1) / 2.0) - log_abs_gamma(p.nu + 0.5)) *
                                 kernel_coeff(p);
                    // the next term is O(rho^{min(2, n-2g)}) relative, so shrink rho as g nears n/2
                    double rho = std::min(1e-6, std::pow(1e-6, 1 / (p.n - 2 * p.gamma)));
                    return Outcome{kernel_K(p, rho) / std::pow(rho, 2 * p.gamma - p.n), lim};
                }));
                // rho -> inf: K e^{(n-1+2nu) rho/2} settles; compare rho = 40 with 30
                out.push_back(rel_job({{"n", n}, {"nu", nu}, {"gamma", g}, {"end", 1}}, tol_or(c, 1e-4), [p] {
                    auto scaled = [&](double rho) { return kernel_K(p, rho) * std::exp((p.n - 1 + 2 * p.nu) * rho / 2); };
                    return Outcome{scaled(40), scaled(30)};
                }));
            }
    return out;
}

std::vector<Job> spherical_eigen(const EffectiveConfig& c) {
    std::vector<Job> out;
    for (int n : c.dims)
        for (double l : c.lambdas)
            for (double rho : {0.3, 1.0, 3.0, 8.0})
                out.push_back(rel_job({{"n", n}, {"lambda", l}, {"rho", rho}}, tol_or(c, 1e-6), [n, l, rho] {
                    double ev = (n - 1) * (n - 1) / 4.0 + l * l;
                    double lap = radial_laplace_beltrami([&](double r) { return spherical_fn(l, n, r); }, rho,
                                                         default_fd_step(rho), n);
                    return Outcome{-lap, ev * spherical_fn(l, n, rho), std::max(1.0, ev)};
                }));
    return out;
}

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> defs = [] {
        GridSpec lam = default_lambda_grid();
        GridSpec none;
        none.count = 0;
        std::vector<SuiteDef> d;
        d.push_back({{"transform-of-K", "quadrature Helgason-Fourier transform of K matches the gamma-ratio closed form"},
                     {3, 4}, list({0.6, 1.0, 1.7}), list({0, 0.5, 1, 2, 4}), transform_K});
        d.push_back({{"transform-of-H", "quadrature transform of H matches (4pi)^{n/2} times its gamma series"},
                     {3, 5}, list({1.0, 1.25, 2.0, 2.25}), list({0, 1, 2}), transform_H});
        d.push_back({{"legendre-integral", "transform of (cosh rho/2)^{-g} matches the Legendre integral closed form"},
                     {}, none, none, legendre_integral});
        d.push_back({{"decomposition-identity", "P = Ptilde + (sin(g pi)/pi) |Gamma(g+1/2+il)|^2"},
                     {}, linear(0.05, 5, 100), linear(0, 50, 100), decomposition});
        d.push_back({{"bottom-constants", "bottom-of-spectrum constants at integer order equal prod (2i-1)^2/4"},
                     {}, none, none, bottom_constants});
        d.push_back({{"integer-order-symbols", "P and Ptilde at integer order equal prod ((j-1/2)^2 + l^2)"},
                     {}, none, list({0, 0.1, 1, 3.3, 20, 50}), integer_symbols});
        d.push_back({{"symbol-equivalence", "(P(l)-P(0)) / (l^2 (l^2+1)^{g-1}) stays positive, finite and settles"},
                     {}, list({0.3, 0.8, 1.0, 1.4, 2.2}), lam, equivalence});
        d.push_back({{"halfdim-zeta-P", "odd n: P(n/2,l) - P(n/2,0) >= l^2 (l^2+zeta)^{n/2-1}"},
                     {3, 5, 7}, none, lam, [](const EffectiveConfig& c) { return halfdim(c, SymbolKind::P); }});
        d.push_back({{"halfdim-zeta-Ptilde", "odd n: Ptilde(n/2,l) - Ptilde(n/2,0) >= l^2 (l^2+zeta)^{n/2-1}"},
                     {3, 5, 7}, none, lam, [](const EffectiveConfig& c) { return halfdim(c, SymbolKind::Ptilde); }});
        std::vector<double> bands = expand(linear(2, 3, 50));
        for (double g : expand(linear(4, 5, 50))) bands.push_back(g);
        d.push_back({{"even-band-margins", "g in [2k, 2k+1]: P(g,l) - P(g,0) >= (l sinh(pi l)/pi) |Gamma(g+il)|^2"},
                     {}, list(bands), lam, even_band});
        d.push_back({{"ratio-chain", "gamma-ratio and rational inequality chain for 2 <= g <= 3"},
                     {}, linear(2, 3, 21), lam, ratio_chain});
        d.push_back({{"h-kernel-differential", "-Delta H - (n-1)^2/4 H equals its closed form (finite differences)"},
                     {3, 5, 7}, none, none, h_kernel_differential});
        d.push_back({{"conformal-green-ball", "ball Green's function equals the conformally weighted K_{1/2,g}"},
                     {3, 5}, list({0.5, 1.0, 1.5}), none, [](const EffectiveConfig& c) { return conformal_green(c, true); }});
        d.push_back({{"conformal-green-halfspace", "half-space Green's function equals (x1 y1)^{g-n/2} K_{1/2,g}"},
                     {3, 5}, list({0.5, 1.0, 1.5}), none, [](const EffectiveConfig& c) { return conformal_green(c, false); }});
        d.push_back({{"image-charge", "n = 3, g = 1 half-space Green's function equals the image-charge formula"},
                     {}, none, none, image_charge});
        d.push_back({{"constants-duality", "Sobolev and HLS constants are dual; Sobolev and Adams spot values"},
                     {}, none, none, constants_duality});
        d.push_back({{"scattering-oracle", "normalized scattering-ODE symbol matches P(g,l)/P(g,0)"},
                     {}, none, list({0.25, 0.5, 1, 2, 4}), nullptr});
        d.push_back({{"gamma-closed-forms", "|Gamma(a+il)|^2 closed forms and the large-l asymptotic"},
                     {}, none, list({0.1, 0.5, 1, 2, 5, 10}), gamma_closed_forms});
        d.push_back({{"kernel-asymptotics", "K_{nu,g} power law at rho -> 0 and exponential decay at rho -> inf"},
                     {3, 4}, list({0.6, 1.0, 1.3}), none, kernel_asymptotics});
        d.push_back({{"spherical-eigen", "spherical function is a Laplace-Beltrami eigenfunction"},
                     {2, 3, 4, 7}, none, list({0, 0.5, 2, 5}), spherical_eigen});
        return d;
    }();
    return defs;
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

CaseResult run_job(const Job& j) {
    CaseResult r;
    r.inputs = j.inputs;
    r.kind = j.kind;
    r.tolerance = j.tol;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        Outcome o = j.eval();
        r.lhs = o.lhs;
        r.rhs = o.rhs;
        if (j.kind == CaseKind::relative) {
            double scale = o.scale > 0 ? o.scale : std::abs(o.rhs);
            r.residual = std::abs(o.lhs - o.rhs) / scale;
            r.pass = r.residual <= j.tol;
        } else {
            r.residual = (o.lhs - o.rhs) / std::max({std::abs(o.lhs), std::abs(o.rhs), 1.0});
            r.pass = r.residual >= -j.tol;
        }
        if (!std::isfinite(r.residual)) {
            r.pass = false;
            r.error = "non-finite residual";
        }
    } catch (const std::exception& e) {
        r.lhs = r.rhs = r.residual = nan;
        r.pass = false;
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
    std::vector<SuiteInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
}

VerificationReport run_suite(const SuiteConfig& config) {
    const auto& defs = registry();
    auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == config.suite_name; });
    if (it == defs.end()) throw ConfigError("unknown suite: " + config.suite_name);
    if (config.jobs < 1) throw ConfigError("jobs must be at least 1");

    VerificationReport rep;
    rep.suite_name = config.suite_name;
    EffectiveConfig& c = rep.config;
    c.dims = config.dimension_list.value_or(it->dims);
    std::sort(c.dims.begin(), c.dims.end());
    c.dims.erase(std::unique(c.dims.begin(), c.dims.end()), c.dims.end());
    c.gammas = sorted(expand(config.gamma_grid.value_or(it->gammas)));
    c.lambdas = sorted(expand(config.lambda_grid.value_or(it->lambdas)));
    if (config.dimension_list && c.dims.empty()) throw ConfigError("empty dimension list");
    if (config.gamma_grid && c.gammas.empty()) throw ConfigError("empty gamma grid");
    if (config.lambda_grid && c.lambdas.empty()) throw ConfigError("empty lambda grid");
    c.tol_rel = config.tolerances.rel;
    c.tol_margin = config.tolerances.margin;
    c.quadrature = config.quadrature;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Job> jobs;
    try {
        if (it->info.name == "scattering-oracle")
            jobs = scattering(c, !config.dimension_list && !config.gamma_grid);
        else
            jobs = it->build(c);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        // a failure while assembling the grid is one failed case, not an abort
        jobs.clear();
        std::string msg = e.what();
        jobs.push_back({{{"setup", 0}}, CaseKind::relative, 0.0, [msg]() -> Outcome { throw ConvergenceError(msg); }});
    }
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        std::size_t m = std::min(a.inputs.size(), b.inputs.size());
        for (std::size_t i = 0; i < m; ++i)
            if (a.inputs[i].second != b.inputs[i].second) return a.inputs[i].second < b.inputs[i].second;
        return a.inputs.size() < b.inputs.size();
    });

    rep.cases.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) rep.cases[i] = run_job(jobs[i]);
    };
    int nthreads = std::min<int>(config.jobs, std::max<std::size_t>(jobs.size(), 1));
    if (nthreads <= 1) worker();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ReportSummary& s = rep.summary;
    s.total = rep.cases.size();
    bool any_margin = false;
    for (const auto& r : rep.cases) {
        if (r.pass) ++s.passed;
        if (!std::isfinite(r.residual)) continue;
        if (r.kind == CaseKind::relative) s.max_abs_residual = std::max(s.max_abs_residual, std::abs(r.residual));
        else {
            s.min_margin = any_margin ? std::min(s.min_margin, r.residual) : r.residual;
            any_margin = true;
        }
    }
    s.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!config.output_path.empty()) write_report({rep}, config.output_path);
    if (!config.csv_path.empty()) write_csv(rep, config.csv_path);
    return rep;
}

}  // namespace hypspec
