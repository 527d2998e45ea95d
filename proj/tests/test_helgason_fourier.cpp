#include <chrono>
#include <cmath>

#include "doctest.h"
#include "hypspec/green_kernels.hpp"
#include "hypspec/helgason_fourier.hpp"
#include "hypspec/special_functions.hpp"
#include "oracle_values.hpp"

using namespace hypspec;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

RadialFunction kernel_fn(const KernelParams& p) {
    return {[p](double rho) { return kernel_K(p, rho); }, p.nu + (p.n - 1) / 2.0};
}
}  // namespace

TEST_CASE("Plancherel density") {
    for (const auto& r : oracle::c_inv_sq_cases) CHECK(rel(c_function_inv_sq(r.lambda, r.n), r.value) < 1e-12);
    CHECK(c_function_inv_sq(0.0, 3) == 0.0);
    for (int n = 2; n <= 6; ++n) {
        CHECK(rel(c_function_inv_sq_regularized(1e-4, n), c_function_inv_sq_regularized(1e-3, n)) < 0.01);
        CHECK(rel(c_function_inv_sq(1e-3, n) / 1e-6, c_function_inv_sq_regularized(1e-3, n)) < 1e-12);
        CHECK(c_function_inv_sq_regularized(0.0, n) > 0);
        for (double l : {0.01, 0.3, 2.0, 9.0}) {
            CHECK(c_function_inv_sq(l, n) > 0);
            CHECK(c_function_inv_sq(-l, n) == c_function_inv_sq(l, n));
        }
    }
    // n = 3: |Gamma(1+il)|^2/|Gamma(il)|^2 = l^2 (1 + l^2) ... / via pi l / sinh: gives l^2
    CHECK(rel(c_function_inv_sq(1.0, 3), 1.0 / (2 * std::pow(2 * kPi, 3))) < 1e-13);
}

TEST_CASE("spherical function") {
    for (const auto& r : oracle::spherical_cases) {
        INFO("lambda=" << r.lambda << " n=" << r.n << " rho=" << r.rho);
        CHECK(std::abs(spherical_fn(r.lambda, r.n, r.rho) - r.value) < 1e-11 * std::abs(r.value));
    }
    for (int n = 2; n <= 7; ++n)
        for (double l : {0.0, 0.5, 1.0, 3.0, 10.0}) {
            CHECK(std::abs(spherical_fn(l, n, 1e-3) - 1.0) < 1e-4);
            for (double rho : {0.05, 0.7, 2.0, 6.0, 15.0}) {
                double v = spherical_fn(l, n, rho);
                CHECK(std::abs(v - spherical_fn(-l, n, rho)) <= 1e-12 * std::max(1.0, std::abs(v)));
                CHECK(std::abs(v) <= 1.0 + 1e-12);
                cplx p = legendre_p_cosh((2.0 - n) / 2, cplx(-0.5, l), rho);
                CHECK(std::abs(p.imag()) <= 1e-10 * std::abs(p.real()) + 1e-300);
            }
            for (double rho : {0.5, 1.5, 4.0}) {
                double lap = radial_laplace_beltrami([&](double r) { return spherical_fn(l, n, r); }, rho,
                                                     default_fd_step(rho), n);
                double ev = (n - 1) * (n - 1) / 4.0 + l * l;
                INFO("n=" << n << " l=" << l << " rho=" << rho);
                CHECK(std::abs(-lap - ev * spherical_fn(l, n, rho)) <= 1e-6 * std::max(1.0, ev));
            }
        }
    CHECK_THROWS_AS(spherical_fn(1.0, 3, 0.0), DomainError);
}

TEST_CASE("closed-form transform of K") {
    CHECK(hf_K_closed(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double l : {0.0, 0.5, 3.0, 20.0}) {
        CHECK(rel(hf_K_closed(0.5, 1, l), 1 / (0.25 + l * l)) < 1e-13);
        CHECK(rel(hf_K_closed(1, 1, l), 1 / (1 + l * l)) < 1e-13);
    }
    for (double nu : {0.5, 1.0, 2.0})
        for (double g : {0.6, 1.0, 1.7}) {
            double prev = 1e300;
            for (int i = 0; i < 50; ++i) {
                double v = hf_K_closed(nu, g, 0.2 * i);
                CHECK(v < prev);
                prev = v;
            }
            for (double l : {0.0, 0.7, 4.0}) {
                auto s = hf_K_series(nu, g, l);
                CHECK(rel(s.value, std::tgamma(g) * hf_K_closed(nu, g, l)) < 1e-10);
            }
        }
    CHECK_THROWS_AS(hf_K_closed(0.0, 1, 1), DomainError);
}

TEST_CASE("quadrature transform of K") {
    auto t0 = std::chrono::steady_clock::now();
    for (double l : {0.0, 1.0, 3.0}) {
        auto r = radial_hf_transform(kernel_fn({1, 1, 3}), l, 3);
        INFO("lambda=" << l << " evals=" << r.evaluations);
        CHECK(rel(r.value, 1 / (1 + l * l)) < 1e-6);
    }
    for (auto p : {KernelParams{0.5, 0.6, 4}, KernelParams{2, 1.7, 3}, KernelParams{0.5, 1.7, 3}})
        for (double l : {0.0, 0.5, 5.0}) {
            auto r = radial_hf_transform(kernel_fn(p), l, p.n);
            INFO("nu=" << p.nu << " g=" << p.gamma << " n=" << p.n << " lambda=" << l << " evals=" << r.evaluations);
            CHECK(rel(r.value, hf_K_closed(p.nu, p.gamma, l)) < 1e-6);
        }
    MESSAGE("transform timing " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
    RadialFunction slow{[](double r) { return std::exp(-0.9 * r); }, 0.9};
    CHECK_THROWS_AS(radial_hf_transform(slow, 1.0, 3), DomainError);
    QuadratureSpec tiny;
    tiny.max_nodes = 100;
    CHECK_THROWS_AS(radial_hf_transform(kernel_fn({1, 1, 3}), 1.0, 3, tiny), ConvergenceError);
}

TEST_CASE("Legendre integral") {
    for (const auto& r : oracle::legendre_integral_cases) {
        CHECK(rel(legendre_integral_closed(r.g, r.lambda, r.n), r.rhs) < 1e-12);
        double g = r.g;
        RadialFunction f{[g](double rho) { return std::pow(std::cosh(rho / 2), -g); }, g / 2};
        auto t = radial_hf_transform(f, r.lambda, r.n);
        CHECK(rel(t.value / std::pow(2 * kPi, r.n / 2.0), r.rhs) < 1e-6);
    }
    RadialFunction pos{[](double rho) { return std::pow(std::cosh(rho / 2), -4.0); }, 2.0};
    CHECK(radial_hf_transform(pos, 0.0, 3).value > 0);
}

TEST_CASE("transform of H") {
    for (const auto& r : oracle::hf_H_cases) {
        auto s = hf_H_series(r.nu, r.gamma, r.n, r.lambda);
        INFO("nu=" << r.nu << " g=" << r.gamma << " n=" << r.n << " l=" << r.lambda << " tail=" << s.tail);
        CHECK(rel(s.value, r.value) < 1e-10);
    }
    CHECK(rel(hf_H_series(1, 1, 3, 0).value, 4 * std::log(2.0) / std::sqrt(kPi)) < 1e-10);
    for (int n = 2; n <= 6; ++n)
        for (double l : {0.0, 1.0}) {
            double want = abs_gamma_sq(0.7, l) / (std::tgamma((n - 1) / 2.0 + 0.7) * std::tgamma(1.2));
            CHECK(rel(hf_H_series(0.7, n / 2.0, n, l).value, want) < 1e-13);
        }
    for (int n = 2; n <= 7; ++n)
        for (double nu : {0.3, 1.0, 2.5})
            for (int j = 0; j < 4; ++j) {
                double g = (n - 1) / 2.0 + 0.12 * j;
                for (double l : {0.0, 0.5, 3.0}) {
                    double v = hf_H_series(nu, g, n, l).value;
                    CHECK(v >= 0);
                    CHECK(v <= hf_H_upper_bound(nu, g, n, l) * (1 + 1e-12));
                }
            }
    for (double l : {0.0, 1.0, 2.0}) {
        KernelParams p{1, 1, 3};
        RadialFunction f{[p](double rho) { return kernel_H(p, rho); }, p.nu + 1.0};
        auto t = radial_hf_transform(f, l, 3);
        CHECK(rel(t.value / hf_H_series_normalization(3), hf_H_series(1, 1, 3, l).value) < 1e-5);
    }
    CHECK_THROWS_AS(hf_H_series(1, 0.9, 3, 0), DomainError);
    CHECK_THROWS_AS(hf_H_series(1, 1, 3, 0, 10), ConvergenceError);
}
