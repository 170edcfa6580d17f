#include "hypspec/bs_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hypspec/geometry.hpp"
#include "hypspec/green_kernel.hpp"
#include "hypspec/rng.hpp"
#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

constexpr double kCutMargin = 1e-3;
constexpr double kRhoFloor = 1e-9;
constexpr int kSplineNodes = 1400;
constexpr double kSplineTol = 1e-8;

double ess_dist(Complex lambda) {
    const double x = lambda.real();
    const double y = lambda.imag();
    return x >= 0.25 ? std::abs(y) : std::hypot(x - 0.25, y);
}

// Kernel with the log singularity removed: G(rho) + log(2 sinh(rho/2))/(2 pi).
Complex smooth_kernel(const SpectralPoint& pt, double rho, const QuadratureConfig& cfg) {
    const double log_term = std::log(rho) + special::log_sinhc(0.5 * rho);
    return green_eval(pt, rho, cfg) + log_term / (2.0 * std::numbers::pi);
}

// Exact angular average of -log(2 sinh(rho/2))/(2 pi) over the circle pair
// (d, t), which carries the kernel's diagonal kink.
double log_part(double d, double t) {
    const double mx = std::max(d, t);
    const double mn = std::min(d, t);
    return -(std::numbers::ln2 + std::log(std::sinh(0.5 * mx)) +
             std::log(std::cosh(0.5 * mn))) /
           (2.0 * std::numbers::pi);
}

// Natural cubic spline of the smooth kernel on a uniform log(rho) grid.
struct KernelSpline {
    double w0 = 0.0;
    double h = 1.0;
    double inv_h = 1.0;
    int count = 0;
    std::vector<Complex> a, b, c, d;

    Complex eval_log(double w) const {
        double t = (w - w0) * inv_h;
        int i = static_cast<int>(t);
        i = std::clamp(i, 0, count - 2);
        const double u = w - (w0 + i * h);
        return ((d[i] * u + c[i]) * u + b[i]) * u + a[i];
    }
    Complex eval(double rho) const { return eval_log(std::log(std::max(rho, kRhoFloor))); }
};

KernelSpline build_spline(const SpectralPoint& pt, double rho_max,
                          const QuadratureConfig& cfg) {
    const int n = kSplineNodes;
    KernelSpline sp;
    sp.count = n;
    sp.w0 = std::log(kRhoFloor);
    sp.h = (std::log(rho_max) - sp.w0) / (n - 1);
    sp.inv_h = 1.0 / sp.h;

    std::vector<Complex> y(n);
    for (int i = 0; i < n; ++i) {
        y[i] = smooth_kernel(pt, std::exp(sp.w0 + i * sp.h), cfg);
    }

    // Natural spline second derivatives via the Thomas algorithm.
    std::vector<Complex> m(n, 0.0), rhs(n, 0.0), diag(n, 4.0);
    for (int i = 1; i + 1 < n; ++i) {
        rhs[i] = 6.0 * (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (sp.h * sp.h);
    }
    for (int i = 2; i + 1 < n; ++i) {
        const Complex f = 1.0 / diag[i - 1];
        diag[i] -= f;
        rhs[i] -= f * rhs[i - 1];
    }
    for (int i = n - 2; i >= 1; --i) {
        m[i] = (rhs[i] - (i + 1 < n - 1 ? m[i + 1] : Complex(0.0))) / diag[i];
    }

    sp.a.resize(n - 1);
    sp.b.resize(n - 1);
    sp.c.resize(n - 1);
    sp.d.resize(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        sp.a[i] = y[i];
        sp.c[i] = 0.5 * m[i];
        sp.d[i] = (m[i + 1] - m[i]) / (6.0 * sp.h);
        sp.b[i] = (y[i + 1] - y[i]) / sp.h - sp.h * (2.0 * m[i] + m[i + 1]) / 6.0;
    }
    return sp;
}

double spline_gate_error(const KernelSpline& sp, const SpectralPoint& pt,
                         double rho_max, const QuadratureConfig& cfg) {
    SampleRng rng(20240817u);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double rho = rng.log_uniform(2.0 * kRhoFloor, 0.5 * rho_max);
        worst = std::max(worst, std::abs(sp.eval(rho) - smooth_kernel(pt, rho, cfg)));
    }
    return worst;
}

std::string format_warning(const char* what, double value) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s %.3e", what, value);
    return buf;
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double fa, double fb, double tol) {
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < 80; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                            0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

}  // namespace

Complex det_r(const Eigen::MatrixXcd& matrix, double r) {
    if (!(r >= 1.0)) {
        throw std::invalid_argument("det_r: requires r >= 1");
    }
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("det_r: requires a square matrix");
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("det_r: eigensolver failed");
    }
    const int terms = static_cast<int>(std::ceil(r)) - 1;
    Complex out = 1.0;
    for (Eigen::Index j = 0; j < matrix.rows(); ++j) {
        const Complex mu = solver.eigenvalues()(j);
        Complex expo = 0.0;
        Complex power = 1.0;
        for (int k = 1; k <= terms; ++k) {
            power *= mu;
            expo += power / static_cast<double>(k);
        }
        out *= (1.0 - mu) * std::exp(expo);
    }
    return out;
}

NystromOperator assemble_bs(const RadialPotential& pot, Complex lambda, int n,
                            const QuadratureConfig& cfg, int angular_points) {
    if (n < 8) {
        throw std::invalid_argument("assemble_bs: requires n >= 8");
    }
    if (angular_points < 64) {
        throw std::invalid_argument("assemble_bs: requires angular_points >= 64");
    }
    if (ess_dist(lambda) < kCutMargin) {
        throw std::invalid_argument(
            "assemble_bs: lambda too close to the essential spectrum");
    }
    const double radius = pot.support_radius();
    const SpectralParams p2(2.0);
    const SpectralPoint pt = psi_p_inv(p2, lambda);
    const int m = angular_points;

    NystromOperator op;
    op.lambda = lambda;
    op.nodes.resize(n);
    op.weights.resize(n);
    const GaussLegendre gl = gauss_legendre(n);
    std::vector<Complex> values(n);
    std::vector<double> cosh_d(n), sinh_d(n);
    for (int i = 0; i < n; ++i) {
        op.nodes[i] = 0.5 * radius * (gl.x[i] + 1.0);
        op.weights[i] = std::numbers::pi * radius * gl.w[i] * std::sinh(op.nodes[i]);
        values[i] = pot(op.nodes[i]);
        cosh_d[i] = std::cosh(op.nodes[i]);
        sinh_d[i] = std::sinh(op.nodes[i]);
    }

    const double rho_max = 2.0 * radius + 1.0;
    const KernelSpline sp = build_spline(pt, rho_max, cfg);
    const double gate_err = spline_gate_error(sp, pt, rho_max, cfg);
    const bool use_spline = gate_err <= kSplineTol;
    if (!use_spline) {
        op.warnings.push_back(
            format_warning("assemble_bs: spline gate failed, direct evaluation;"
                           " error",
                           gate_err));
    }

    std::vector<double> half_sin_sq(m);
    for (int k = 0; k < m; ++k) {
        const double xi = (k + 0.5) * std::numbers::pi / m;
        const double s = std::sin(0.5 * xi);
        half_sin_sq[k] = s * s;
    }

    Eigen::MatrixXcd kbar(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double diff = 0.5 * (op.nodes[i] - op.nodes[j]);
            const double sd = std::sinh(diff);
            const double base = 2.0 * sd * sd;
            const double amp = 2.0 * sinh_d[i] * sinh_d[j];
            Complex acc = 0.0;
            for (int k = 0; k < m; ++k) {
                const double rho =
                    std::max(acosh1p(base + amp * half_sin_sq[k]), kRhoFloor);
                acc += use_spline ? sp.eval(rho) : smooth_kernel(pt, rho, cfg);
            }
            const Complex entry =
                acc / static_cast<double>(m) + log_part(op.nodes[i], op.nodes[j]);
            kbar(i, j) = entry;
            kbar(j, i) = entry;
        }
    }

    // Diagonal correction: replace the quadrature of the kinked log part in
    // row i by its exact integral, applied at the collocation node.
    std::vector<double> kink(n);
    for (int i = 0; i < n; ++i) {
        const double di = op.nodes[i];
        const double lower_t = std::numbers::ln2 + std::log(std::sinh(0.5 * di));
        auto head = [&](double t) {
            return std::sinh(t) * (lower_t + std::log(std::cosh(0.5 * t)));
        };
        const double upper_t = std::numbers::ln2 + std::log(std::cosh(0.5 * di));
        auto tail = [&](double t) {
            return std::sinh(t) * (upper_t + std::log(std::sinh(0.5 * t)));
        };
        double exact = -integrate_gk(head, 0.0, di, 1e-12, 200);
        exact -= integrate_gk(tail, di, radius, 1e-12, 200);
        double quad = 0.0;
        for (int j = 0; j < n; ++j) {
            quad += op.weights[j] * log_part(di, op.nodes[j]);
        }
        kink[i] = exact - quad;
    }

    op.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            op.matrix(i, j) = values[i] * op.weights[j] * kbar(i, j);
        }
        op.matrix(i, i) += values[i] * kink[i];
    }
    if (!op.matrix.allFinite()) {
        throw std::runtime_error("assemble_bs: non-finite matrix entries");
    }

    // Angular-rule error probe on a representative off-diagonal pair.
    {
        const int i = n / 3, j = (2 * n) / 3;
        const double diff = 0.5 * (op.nodes[i] - op.nodes[j]);
        const double sd = std::sinh(diff);
        const double base = 2.0 * sd * sd;
        const double amp = 2.0 * sinh_d[i] * sinh_d[j];
        Complex coarse = 0.0, fine = 0.0;
        for (int k = 0; k < 2 * m; ++k) {
            const double xi = (k + 0.5) * std::numbers::pi / (2 * m);
            const double s = std::sin(0.5 * xi);
            const double rho = std::max(acosh1p(base + amp * 2.0 * s * s), kRhoFloor);
            fine += sp.eval(rho);
        }
        for (int k = 0; k < m; ++k) {
            const double rho =
                std::max(acosh1p(base + amp * half_sin_sq[k]), kRhoFloor);
            coarse += sp.eval(rho);
        }
        const double angle_err =
            std::abs(coarse / static_cast<double>(m) - fine / (2.0 * m));
        if (gate_err + angle_err > 1e-6) {
            op.warnings.push_back(
                format_warning("assemble_bs: estimated quadrature error",
                               gate_err + angle_err));
        }
    }
    return op;
}

Eigen::MatrixXcd symmetrized_matrix(const NystromOperator& op) {
    const int n = static_cast<int>(op.nodes.size());
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = op.matrix(i, j) * std::sqrt(op.weights[i] / op.weights[j]);
        }
    }
    return out;
}

Complex bs_determinant(const RadialPotential& pot, Complex lambda, int n,
                       const QuadratureConfig& cfg, int angular_points) {
    const NystromOperator op = assemble_bs(pot, lambda, n, cfg, angular_points);
    Eigen::MatrixXcd shifted = op.matrix;
    shifted.diagonal().array() += 1.0;
    const Complex det = Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).determinant();
    return det * std::exp(-op.matrix.trace());
}

namespace {

int winding_multiplicity(const std::function<Complex(Complex)>& g, Complex root,
                         std::vector<std::string>& warnings) {
    const double rc = std::max(1e-7, 1e-5 * (1.0 + std::abs(root)));
    const int steps = 10;
    double total = 0.0;
    Complex prev;
    try {
        prev = g(root + rc);
        const Complex first = prev;
        for (int k = 1; k <= steps; ++k) {
            const double ang = 2.0 * std::numbers::pi * k / steps;
            const Complex cur = k == steps
                                    ? first
                                    : g(root + rc * Complex(std::cos(ang), std::sin(ang)));
            if (std::abs(prev) < 1e-300 || std::abs(cur) < 1e-300) {
                warnings.push_back("find_eigenvalues: degenerate winding circle");
                return 1;
            }
            total += std::arg(cur / prev);
            prev = cur;
        }
    } catch (const std::exception&) {
        warnings.push_back("find_eigenvalues: winding circle left the valid domain");
        return 1;
    }
    const int mult = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
    if (mult < 1) {
        warnings.push_back("find_eigenvalues: winding estimate below 1, clamped");
        return 1;
    }
    return mult;
}

}  // namespace

OracleResult find_eigenvalues(const RadialPotential& pot, const SearchBox& box,
                              int n, const QuadratureConfig& cfg,
                              int angular_points) {
    if (!(box.x1 > box.x0) || !(box.y1 >= box.y0)) {
        throw std::invalid_argument("find_eigenvalues: degenerate search box");
    }
    const SpectralParams p2(2.0);
    std::vector<std::string> warnings;
    std::vector<Eigenvalue> found;

    bool pot_real = true;
    for (const auto& s : pot.samples()) {
        if (s.value.imag() != 0.0) pot_real = false;
    }
    const bool real_line = box.y0 == 0.0 && box.y1 == 0.0;

    auto g = [&](Complex lam) {
        return bs_determinant(pot, lam, n, cfg, angular_points);
    };

    if (pot_real && real_line) {
        const double lo = box.x0;
        const double hi = std::min(box.x1, 0.25 - kCutMargin);
        if (lo >= hi) {
            warnings.push_back("find_eigenvalues: search interval empty after cut margin");
            return OracleResult{EigenvalueList(p2, {}), warnings};
        }
        auto gr = [&](double x) { return g(Complex(x, 0.0)).real(); };
        const int scan = 33;
        std::vector<double> xs(scan), fs(scan);
        for (int i = 0; i < scan; ++i) {
            xs[i] = i == scan - 1 ? hi : lo + (hi - lo) * i / (scan - 1);
            fs[i] = gr(xs[i]);
        }
        for (int i = 0; i + 1 < scan; ++i) {
            if (!std::isfinite(fs[i]) || !std::isfinite(fs[i + 1])) continue;
            if (fs[i] == 0.0) {
                found.push_back({Complex(xs[i], 0.0), 1});
                continue;
            }
            if ((fs[i] > 0.0) == (fs[i + 1] > 0.0)) continue;
            const double tol = 1e-13 * (1.0 + std::abs(xs[i]));
            const double root = brent_root(gr, xs[i], xs[i + 1], fs[i], fs[i + 1], tol);
            found.push_back({Complex(root, 0.0), 1});
        }
    } else {
        const int nx = 17;
        const int ny = real_line ? 1 : 11;
        std::vector<std::vector<double>> mag(ny, std::vector<double>(nx, -1.0));
        std::vector<std::vector<Complex>> pts(ny, std::vector<Complex>(nx));
        for (int iy = 0; iy < ny; ++iy) {
            for (int ix = 0; ix < nx; ++ix) {
                const double x = box.x0 + (box.x1 - box.x0) * ix / (nx - 1);
                const double y =
                    ny == 1 ? box.y0 : box.y0 + (box.y1 - box.y0) * iy / (ny - 1);
                const Complex lam(x, y);
                pts[iy][ix] = lam;
                if (ess_dist(lam) < kCutMargin) continue;
                mag[iy][ix] = std::abs(g(lam));
            }
        }
        std::vector<Complex> seeds;
        for (int iy = 0; iy < ny; ++iy) {
            for (int ix = 0; ix < nx; ++ix) {
                const double v = mag[iy][ix];
                if (v < 0.0) continue;
                bool is_min = true;
                for (int dy = -1; dy <= 1 && is_min; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int jx = ix + dx, jy = iy + dy;
                        if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
                        if (mag[jy][jx] >= 0.0 && mag[jy][jx] <= v) {
                            is_min = false;
                            break;
                        }
                    }
                }
                if (is_min) seeds.push_back(pts[iy][ix]);
            }
        }
        for (Complex lam : seeds) {
            bool converged = false;
            try {
                for (int it = 0; it < 25; ++it) {
                    const double h = 1e-6 * (1.0 + std::abs(lam));
                    const Complex gv = g(lam);
                    const Complex gd = (g(lam + h) - g(lam - h)) / (2.0 * h);
                    if (std::abs(gd) < 1e-300) break;
                    const Complex step = gv / gd;
                    lam -= step;
                    if (std::abs(step) < 1e-10 * (1.0 + std::abs(lam))) {
                        converged = true;
                        break;
                    }
                }
            } catch (const std::exception&) {
                warnings.push_back("find_eigenvalues: refinement left the valid domain");
                continue;
            }
            if (!converged) {
                warnings.push_back("find_eigenvalues: candidate did not converge");
                continue;
            }
            const double pad = 1e-6;
            if (lam.real() < box.x0 - pad || lam.real() > box.x1 + pad ||
                lam.imag() < box.y0 - pad || lam.imag() > box.y1 + pad ||
                ess_dist(lam) < kCutMargin) {
                continue;
            }
            if (std::abs(g(lam)) > 1e-6) {
                warnings.push_back("find_eigenvalues: rejected shallow minimum");
                continue;
            }
            found.push_back({lam, 1});
        }
    }

    std::sort(found.begin(), found.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        return a.lambda.imag() < b.lambda.imag();
    });
    std::vector<Eigenvalue> unique;
    for (const auto& e : found) {
        if (!unique.empty() &&
            std::abs(e.lambda - unique.back().lambda) <
                1e-7 * (1.0 + std::abs(e.lambda))) {
            continue;
        }
        unique.push_back(e);
    }
    for (auto& e : unique) {
        e.mult = winding_multiplicity(g, e.lambda, warnings);
    }
    return OracleResult{EigenvalueList(p2, unique), warnings};
}

}  // namespace hypspec
