#include "hypspec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypspec {

RadialPotential::RadialPotential(std::vector<PotentialSample> samples, double support_radius)
    : samples_(std::move(samples)), support_(support_radius) {
    if (samples_.empty()) {
        throw std::invalid_argument("RadialPotential: needs at least one sample");
    }
    if (!std::isfinite(support_) || !(support_ > 0.0)) {
        throw std::invalid_argument("RadialPotential: support radius must be finite and positive");
    }
    double prev = -1.0;
    for (const auto& s : samples_) {
        if (!std::isfinite(s.d) || s.d < 0.0 || s.d <= prev) {
            throw std::invalid_argument("RadialPotential: sample grid must be >= 0 and strictly increasing");
        }
        if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag())) {
            throw std::invalid_argument("RadialPotential: sample values must be finite");
        }
        prev = s.d;
    }
}

RadialPotential RadialPotential::step_well(double depth, double radius) {
    return RadialPotential({{0.0, Complex(-depth, 0.0)}, {radius, Complex(-depth, 0.0)}}, radius);
}

Complex RadialPotential::operator()(double d) const {
    if (d < 0.0) {
        throw std::invalid_argument("RadialPotential: negative distance");
    }
    if (d > support_) return 0.0;
    if (d <= samples_.front().d) return samples_.front().value;
    if (d >= samples_.back().d) return samples_.back().value;
    const auto it = std::upper_bound(
        samples_.begin(), samples_.end(), d,
        [](double lhs, const PotentialSample& s) { return lhs < s.d; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (d - lo.d) / (hi.d - lo.d);
    return lo.value + t * (hi.value - lo.value);
}

double RadialPotential::lr_norm(double r, const QuadratureConfig& cfg) const {
    if (!(r >= 1.0)) {
        throw std::invalid_argument("RadialPotential::lr_norm: requires r >= 1");
    }
    // Piecewise-smooth integrand; split at the sample nodes and the support
    // edge so each panel is smooth.
    std::vector<double> cuts{0.0};
    for (const auto& s : samples_) {
        if (s.d > 0.0 && s.d < support_) cuts.push_back(s.d);
    }
    cuts.push_back(support_);
    std::sort(cuts.begin(), cuts.end());

    auto f = [&](double d) { return std::sinh(d) * std::pow(std::abs((*this)(d)), r); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-14) continue;
        total += integrate_gk(f, cuts[i], cuts[i + 1], cfg.rel_tol, cfg.max_panels);
    }
    return std::pow(2.0 * std::numbers::pi * total, 1.0 / r);
}

double RadialPotential::linf_norm() const {
    double out = 0.0;
    for (const auto& s : samples_) {
        if (s.d > support_) break;
        out = std::max(out, std::abs(s.value));
    }
    return out;
}

}  // namespace hypspec
