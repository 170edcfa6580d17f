#pragma once

#include <vector>

#include "hypspec/quadrature.hpp"
#include "hypspec/spectral_regions.hpp"

namespace hypspec {

struct PotentialSample {
    double d;
    Complex value;
};

/// Radial potential profile: piecewise-linear between samples, constant
/// before the first and after the last sample, identically zero beyond the
/// support radius.
class RadialPotential {
public:
    RadialPotential(std::vector<PotentialSample> samples, double support_radius);

    /// Attractive well of the given depth: value -depth on [0, radius].
    static RadialPotential step_well(double depth, double radius);

    Complex operator()(double d) const;

    const std::vector<PotentialSample>& samples() const { return samples_; }
    double support_radius() const { return support_; }

    /// (2 pi int_0^support sinh(d) |V(d)|^r dd)^{1/r}, r >= 1.
    double lr_norm(double r, const QuadratureConfig& cfg = {}) const;

    /// Essential supremum; the piecewise-linear profile attains it at a node.
    double linf_norm() const;

private:
    std::vector<PotentialSample> samples_;
    double support_;
};

}  // namespace hypspec
