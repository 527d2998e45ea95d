#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hypspec {

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// one 10-point Gauss / 21-point Kronrod panel on [a, b]
template <class T, class F>
T gk21_panel(F& f, double a, double b, double& err) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
    using G = boost::math::quadrature::gauss<double, 10>;
    const auto& xk = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = G::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wk[0];
    T gauss = T{};
    for (std::size_t i = 1; i < xk.size(); ++i) {
        T fp = f(c + h * xk[i]);
        T fm = f(c - h * xk[i]);
        kron += (fp + fm) * wk[i];
        if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
    }
    err = std::abs((kron - gauss) * h);
    return kron * h;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (G10/K21): bisects the panel with the largest error estimate
// until the summed estimate is below max(abs_tol, rel_tol*|I|) or the evaluation budget runs out.
template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                                 std::size_t max_evals, int initial_panels = 1) {
    struct Panel {
        double a, b, err;
        T val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    QuadResult<T> res;
    std::priority_queue<Panel> heap;
    const int m = initial_panels < 1 ? 1 : initial_panels;
    T total{};
    double total_err = 0.0;
    for (int i = 0; i < m; ++i) {
        double lo = a + (b - a) * i / m, hi = (i + 1 == m) ? b : a + (b - a) * (i + 1) / m;
        double e;
        T v = detail::gk21_panel<T>(f, lo, hi, e);
        res.evaluations += 21;
        heap.push({lo, hi, e, v});
        total += v;
        total_err += e;
    }
    while (true) {
        if (res.evaluations > max_evals) break;
        if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            res.converged = true;
            break;
        }
        if (res.evaluations + 42 > max_evals) break;
        Panel p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            // panel cannot be split further in double precision
            heap.push({p.a, p.b, 0.0, p.val});
            total_err -= p.err;
            continue;
        }
        double e1, e2;
        T v1 = detail::gk21_panel<T>(f, p.a, mid, e1);
        T v2 = detail::gk21_panel<T>(f, mid, p.b, e2);
        res.evaluations += 42;
        heap.push({p.a, mid, e1, v1});
        heap.push({mid, p.b, e2, v2});
        total += v1 + v2 - p.val;
        total_err += e1 + e2 - p.err;
    }
    // resum to shed the drift of the running updates
    T sum{};
    double err = 0.0;
    while (!heap.empty()) {
        sum += heap.top().val;
        err += heap.top().err;
        heap.pop();
    }
    res.value = sum;
    res.error = err;
    return res;
}

}  // namespace hypspec
