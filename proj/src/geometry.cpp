#include "hypspec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspec {

double acosh1p(double q) {
    if (q < 0.0)
        throw std::invalid_argument("acosh1p: negative argument");
    if (q < 1e-8) {
        // acosh(1+q) = sqrt(2q) (1 - q/12 + 3q^2/160 - ...)
        return std::sqrt(2.0 * q) * (1.0 - q / 12.0 + 3.0 * q * q / 160.0);
    }
    // Forming 1+q first would round away up to half an ulp of 1, which for
    // small q costs ~ulp/(2q) in relative accuracy; this form works on q alone.
    return std::log1p(q + std::sqrt(q * (q + 2.0)));
}

double geodesic_distance(const HyperPoint& a, const HyperPoint& b) {
    if (!(a.t > 0.0) || !(b.t > 0.0))
        throw std::invalid_argument("geodesic_distance: requires t > 0");
    const double dy = a.y - b.y;
    const double dt = a.t - b.t;
    const double q = (dy * dy + dt * dt) / (2.0 * a.t * b.t);
    return acosh1p(q);
}

double polar_volume_weight(double r) {
    if (r < 0.0)
        throw std::invalid_argument("polar_volume_weight: requires r >= 0");
    return std::sinh(r);
}

HyperPoint polar_to_point(const PolarCoord& pc) {
    if (pc.r < 0.0)
        throw std::invalid_argument("polar_to_point: requires r >= 0");
    // Disk model: the point at distance r in direction xi from the centre is
    // w = tanh(r/2) e^{i xi}; the Cayley map z = i(1+w)/(1-w) carries the
    // disk centre to (0, 1) isometrically.
    const double rho = std::tanh(0.5 * pc.r);
    const double wx = rho * std::cos(pc.xi);
    const double wy = rho * std::sin(pc.xi);
    const double denom = (1.0 - wx) * (1.0 - wx) + wy * wy;
    const double re = (1.0 - wx * wx - wy * wy) / denom;  // Im z
    const double im = 2.0 * wy / denom;                   // Re of (1+w)/(1-w) rotated
    return HyperPoint{-im, re};
}

double polar_distance(double r1, double r2, double xi) {
    if (r1 < 0.0 || r2 < 0.0)
        throw std::invalid_argument("polar_distance: requires r >= 0");
    const double sh = std::sinh(0.5 * (r1 - r2));
    const double sx = std::sin(0.5 * xi);
    const double q = 2.0 * sh * sh + 2.0 * std::sinh(r1) * std::sinh(r2) * sx * sx;
    return acosh1p(q);
}

}  // namespace hypspec
