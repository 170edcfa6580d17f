#include "hypspec/spectral_regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypspec {

SpectralParams::SpectralParams(double p_in) {
    if (!(p_in >= 1.0) || !std::isfinite(p_in)) {
        throw std::invalid_argument("SpectralParams: p must be finite and >= 1");
    }
    p = p_in;
    p_conj = (p == 1.0) ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
    const double u = 1.0 / p;
    gamma_p = std::abs(0.5 - u);
    vertex = u * (1.0 - u);
}

bool sigma_p_contains(const SpectralParams& pp, Complex lambda) {
    const double a = lambda.real();
    const double b = lambda.imag();
    if (a < pp.vertex) return false;
    const double c = 2.0 * pp.gamma_p;  // |1 - 2/p|
    return b * b <= c * c * (a - pp.vertex);
}

Complex psi_p(const SpectralParams& pp, Complex z) {
    if (!(z.real() > 0.0)) {
        throw std::invalid_argument("psi_p: requires Re z > 0");
    }
    const Complex zg = z + pp.gamma_p;
    return 0.25 - zg * zg;
}

SpectralPoint psi_p_inv(const SpectralParams& pp, Complex lambda) {
    if (sigma_p_contains(pp, lambda)) {
        throw std::invalid_argument("psi_p_inv: lambda lies in the spectral region");
    }
    const Complex w = std::sqrt(0.25 - lambda);  // principal branch, Re w > gamma_p
    SpectralPoint pt;
    pt.lambda = lambda;
    pt.z = w - pp.gamma_p;
    pt.s = 0.5 + w;
    return pt;
}

namespace {

// Squared distance from (x, y) to the boundary point vertex + t^2 + i c t.
double boundary_gap_sq(double x, double y, double v, double c, double t) {
    const double dx = x - v - t * t;
    const double dy = y - c * t;
    return dx * dx + dy * dy;
}

double golden_min(double x, double y, double v, double c, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double t1 = b - kInvPhi * (b - a);
    double t2 = a + kInvPhi * (b - a);
    double f1 = boundary_gap_sq(x, y, v, c, t1);
    double f2 = boundary_gap_sq(x, y, v, c, t2);
    while (b - a > 1e-12) {
        if (f1 <= f2) {
            b = t2;
            t2 = t1;
            f2 = f1;
            t1 = b - kInvPhi * (b - a);
            f1 = boundary_gap_sq(x, y, v, c, t1);
        } else {
            a = t1;
            t1 = t2;
            f1 = f2;
            t2 = a + kInvPhi * (b - a);
            f2 = boundary_gap_sq(x, y, v, c, t2);
        }
    }
    return boundary_gap_sq(x, y, v, c, 0.5 * (a + b));
}

}  // namespace

double dist_to_sigma_p(const SpectralParams& pp, Complex lambda) {
    if (sigma_p_contains(pp, lambda)) return 0.0;
    const double x = lambda.real();
    const double y = lambda.imag();
    const double v = pp.vertex;
    const double c = 2.0 * pp.gamma_p;

    if (c == 0.0) {
        // Half-line [1/4, inf): closed form.
        if (x >= v) return std::abs(y);
        return std::hypot(x - v, y);
    }

    // Minimise the quartic gap over the boundary parameter.  A coarse scan
    // locates every local minimum; golden-section refines each candidate.
    const double width = 1.0 + std::sqrt(2.0 * std::abs(x - v) + c * c) +
                         std::cbrt(std::abs(c * y));
    constexpr int kScan = 257;
    double best = std::numeric_limits<double>::infinity();
    double prev2 = 0.0, prev1 = 0.0;
    double tprev2 = 0.0, tprev1 = 0.0;
    for (int i = 0; i < kScan; ++i) {
        const double t = -width + 2.0 * width * i / (kScan - 1);
        const double f = boundary_gap_sq(x, y, v, c, t);
        if (i >= 2 && prev1 <= prev2 && prev1 <= f) {
            best = std::min(best, golden_min(x, y, v, c, tprev2, t));
        }
        prev2 = prev1;
        tprev2 = tprev1;
        prev1 = f;
        tprev1 = t;
    }
    // Endpoints of the scan window.
    best = std::min(best, boundary_gap_sq(x, y, v, c, -width));
    best = std::min(best, boundary_gap_sq(x, y, v, c, width));
    return std::sqrt(best);
}

std::vector<Complex> boundary_curve(const SpectralParams& pp, double t0, double t1, int n) {
    if (n < 2) throw std::invalid_argument("boundary_curve: need n >= 2");
    const double c = pp.p == 2.0 ? 0.0 : (1.0 - 2.0 / pp.p);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = t0 + (t1 - t0) * i / (n - 1);
        out.emplace_back(pp.vertex + t * t, c * t);
    }
    return out;
}

}  // namespace hypspec
