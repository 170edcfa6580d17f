#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hypspec {

/// Controls for the kernel quadrature.
struct QuadratureConfig {
    double rel_tol = 1e-10;          // relative tolerance of the integral
    int max_panels = 400;            // adaptive panel budget, >= 16
    double truncation_margin = 40.0; // upper cutoff in units of 1/(Re s - 1/2)
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};
GaussLegendre gauss_legendre(int n);

namespace detail {
// 15-point Kronrod extension of 7-point Gauss; nodes are symmetric about 0.
extern const double kKronrodX[8];
extern const double kKronrodW[8];
extern const double kGaussW[4];
}  // namespace detail

/// Adaptive Gauss-Kronrod 15(7) on [a, b].  Value type follows the integrand
/// (double or std::complex<double>).  Throws std::runtime_error when the
/// panel budget is exhausted before the tolerance is met.
template <class F>
auto integrate_gk(F&& f, double a, double b, double rel_tol, int max_panels) {
    using V = decltype(f(a));
    struct Panel {
        double a, b;
        V value;
        double err;
    };
    auto rule = [&f](double lo, double hi, V& value) -> double {
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        V gk{}, g7{};
        for (int i = 0; i < 8; ++i) {
            const double dx = h * detail::kKronrodX[i];
            V fv = f(c + dx);
            if (detail::kKronrodX[i] != 0.0) fv += f(c - dx);
            gk += detail::kKronrodW[i] * fv;
            if (i % 2 == 1) g7 += detail::kGaussW[i / 2] * fv;
        }
        value = gk * h;
        return std::abs(gk - g7) * h;
    };

    std::vector<Panel> panels;
    Panel first{a, b, V{}, 0.0};
    first.err = rule(a, b, first.value);
    panels.push_back(first);
    int used = 1;
    while (used < max_panels) {
        V total{};
        double err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        const double scale = std::max(std::abs(total), 1e-300);
        if (err <= rel_tol * scale) return total;
        Panel& p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        Panel right{mid, p.b, V{}, 0.0};
        right.err = rule(mid, p.b, right.value);
        p.b = mid;
        p.err = rule(p.a, mid, p.value);
        panels.push_back(right);
        ++used;
    }
    V total{};
    double err = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        err += p.err;
    }
    if (err <= 10.0 * rel_tol * std::max(std::abs(total), 1e-300)) return total;
    throw std::runtime_error("integrate_gk: panel budget exhausted before convergence");
}

}  // namespace hypspec
