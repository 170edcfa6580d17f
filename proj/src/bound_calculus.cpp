#include "hypspec/bound_calculus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hypspec/green_kernel.hpp"

namespace hypspec {

namespace {

constexpr double kBoundaryTol = 1e-12;

void require_upper_half(Complex z) {
    if (!(z.real() > 0.0)) {
        throw std::invalid_argument("bound_calculus: requires Re z > 0");
    }
}

double ess_spectrum_dist(Complex lambda) {
    const double x = lambda.real();
    const double y = lambda.imag();
    return x >= 0.25 ? std::abs(y) : std::hypot(x - 0.25, y);
}

}  // namespace

double resolvent_norm_bound(const SpectralParams& params, Complex z) {
    require_upper_half(z);
    if (params.p == 2.0) {
        return 1.0 / ess_spectrum_dist(psi_p(params, z));
    }
    const double x = z.real();
    const double g = params.gamma_p;
    return 1.0 / (std::pow(x, 2.0 - 2.0 * g) * std::pow(1.0 + x, 2.0 * g));
}

double bs_opnorm_bound(const SpectralParams& params, Complex z, double v_inf) {
    require_upper_half(z);
    if (params.p < 2.0) {
        throw std::invalid_argument("bs_opnorm_bound: requires p >= 2");
    }
    if (v_inf < 0.0) {
        throw std::invalid_argument("bs_opnorm_bound: requires v_inf >= 0");
    }
    if (v_inf == 0.0) return 0.0;
    if (params.p == 2.0) {
        return v_inf / ess_spectrum_dist(psi_p(params, z));
    }
    const double x = z.real();
    const double a = 1.0 + 2.0 / params.p;
    return v_inf / (std::pow(x, a) * std::pow(1.0 + x, 2.0 - a));
}

SummingBounds bs_summing_bound(const SpectralParams& params, Complex z,
                               const PotentialSpec& pot) {
    require_upper_half(z);
    const double p = params.p;
    const double r = pot.r;
    if (!(p >= 2.0) || !(r >= p)) {
        throw std::invalid_argument("bs_summing_bound: requires 2 <= p <= r");
    }
    const double c0 = c0_constant();
    const double x = z.real();
    const double v = pot.v_norm;

    SummingBounds out;
    if (std::abs(r - p) < 1e-12) {
        if (p == 2.0) {
            out.power_p = c0 * v * v / (std::abs(z + 0.5) * x);
        } else {
            out.power_p =
                c0 * std::pow(v, p) * std::pow(1.0 / (x * (x + 0.5)), p - 1.0);
        }
    }
    if (p == 2.0) {
        const double dist = ess_spectrum_dist(psi_p(params, z));
        out.summing = std::pow(c0, 1.0 / r) * v * std::pow(1.0 / dist, 1.0 - 2.0 / r) *
                      std::pow(1.0 / (std::abs(z + 0.5) * x), 1.0 / r);
        out.simplified = v * std::pow(1.0 / std::abs(z), 1.0 - 2.0 / r) *
                         std::pow(1.0 / x, 1.0 - 1.0 / r);
    } else {
        out.summing = std::pow(c0, 1.0 / r) * v *
                      std::pow(1.0 / x, 1.0 + 2.0 / p - 3.0 / r) *
                      std::pow(1.0 / (x + 0.5), 1.0 - 2.0 / p + 1.0 / r);
        out.simplified = std::pow(2.0, 1.0 - 2.0 / p) * v *
                         std::pow(1.0 / x, 1.0 + 2.0 / p - 3.0 / r);
    }
    return out;
}

EnclosureVerdict l2_exclusion_certificate(const PotentialSpec& pot, Complex lambda) {
    if (!(pot.r >= 2.0)) {
        throw std::invalid_argument("l2_exclusion_certificate: requires r >= 2");
    }
    const double dist = ess_spectrum_dist(lambda);
    if (dist <= kBoundaryTol) {
        throw std::invalid_argument(
            "l2_exclusion_certificate: lambda lies on the essential spectrum");
    }
    const double m = std::sqrt(std::abs(0.25 - lambda));

    EnclosureVerdict out;
    out.lambda = lambda;
    out.log_lhs = (pot.r - 1.0) * std::log(dist) + std::log1p(1.0 / (2.0 * m));
    out.log_rhs = 1.5 * std::numbers::ln2 + std::log(c0_constant()) +
                  pot.r * std::log(pot.v_norm);
    out.lhs = std::exp(out.log_lhs);
    out.rhs = std::exp(out.log_rhs);
    out.excluded = out.log_lhs > out.log_rhs;
    return out;
}

EnclosureVerdict lp_exclusion_certificate(const SpectralParams& params,
                                          const PotentialSpec& pot, Complex lambda) {
    const double pmax = std::max(params.p, params.p_conj);
    if (!(pmax > 2.0)) {
        throw std::invalid_argument("lp_exclusion_certificate: requires p != 2");
    }
    // Tolerate roundoff in the conjugate exponent so that r == max(p, p')
    // is accepted from either member of a dual pair.
    if (!(pot.r >= pmax * (1.0 - 1e-12))) {
        throw std::invalid_argument("lp_exclusion_certificate: requires r >= max(p, p')");
    }
    const double dist = dist_to_sigma_p(params, lambda);
    if (dist <= kBoundaryTol) {
        throw std::invalid_argument(
            "lp_exclusion_certificate: lambda lies in the spectral region");
    }
    const double r = pot.r;
    const double m = std::sqrt(std::abs(0.25 - lambda));

    EnclosureVerdict out;
    out.lambda = lambda;
    out.log_lhs = (2.0 * r - 2.0) * (std::log(dist) - std::log(m)) +
                  (2.0 * r * params.gamma_p + 1.0) * std::log1p(m / (8.0 * dist));
    out.log_rhs = (2.0 * r - 2.0) * std::log(16.0) + std::log(c0_constant()) +
                  r * std::log(pot.v_norm);
    out.lhs = std::exp(out.log_lhs);
    out.rhs = std::exp(out.log_rhs);
    out.excluded = out.log_lhs > out.log_rhs;
    return out;
}

EnclosureMask enclosure_region(const SpectralParams& params, const PotentialSpec& pot,
                               double x0, double x1, double y0, double y1,
                               int nx, int ny) {
    if (!(x1 > x0) || !(y1 > y0) || nx < 1 || ny < 1) {
        throw std::invalid_argument("enclosure_region: degenerate grid");
    }
    EnclosureMask mask;
    mask.x0 = x0;
    mask.x1 = x1;
    mask.y0 = y0;
    mask.y1 = y1;
    mask.nx = nx;
    mask.ny = ny;
    mask.cells.assign(static_cast<std::size_t>(nx) * ny, 0);

    const double dx = (x1 - x0) / nx;
    const double dy = (y1 - y0) / ny;
    const bool use_l2 = params.p == 2.0;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Complex lambda(x0 + (ix + 0.5) * dx, y0 + (iy + 0.5) * dy);
            const double dist = use_l2 ? ess_spectrum_dist(lambda)
                                       : dist_to_sigma_p(params, lambda);
            bool candidate;
            if (dist <= kBoundaryTol) {
                candidate = true;
            } else if (use_l2) {
                candidate = !l2_exclusion_certificate(pot, lambda).excluded;
            } else {
                candidate = !lp_exclusion_certificate(params, pot, lambda).excluded;
            }
            mask.cells[static_cast<std::size_t>(iy) * nx + ix] = candidate ? 1 : 0;
        }
    }
    return mask;
}

std::string mask_csv(const EnclosureMask& mask) {
    std::ostringstream os;
    for (int iy = mask.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < mask.nx; ++ix) {
            if (ix) os << ',';
            os << (mask.at(ix, iy) ? 1 : 0);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hypspec
