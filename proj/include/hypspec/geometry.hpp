#pragma once

namespace hypspec {

/// Point of the upper half-plane model; the metric is t^{-2}(dy^2 + dt^2).
struct HyperPoint {
    double y;
    double t;  // must be > 0
};

/// Geodesic polar coordinates about the base point (0, 1).
struct PolarCoord {
    double r;   // geodesic radius >= 0
    double xi;  // angle
};

/// Geodesic distance, computed from the chord identity
///   cosh d - 1 = (|y - y'|^2 + (t - t')^2) / (2 t t').
/// Throws std::invalid_argument unless both points have t > 0.
double geodesic_distance(const HyperPoint& a, const HyperPoint& b);

/// Weight sinh(r) of the polar area element sinh(r) dr dxi.  r >= 0 required.
double polar_volume_weight(double r);

/// Half-plane coordinates of the polar point (r, xi); the result lies at
/// geodesic distance r from the base point (0, 1).
HyperPoint polar_to_point(const PolarCoord& pc);

/// Distance between the polar points (r1, 0) and (r2, xi) about a common
/// base point.  Hyperbolic law of cosines, evaluated cancellation-free as
///   cosh d - 1 = 2 sinh^2((r1 - r2)/2) + 2 sinh r1 sinh r2 sin^2(xi/2).
double polar_distance(double r1, double r2, double xi);

/// acosh(1 + q) for q >= 0; series below q = 1e-8 where the direct call
/// would lose half the significant digits.
double acosh1p(double q);

}  // namespace hypspec
