#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypspec/potential.hpp"
#include "hypspec/spectral_regions.hpp"

namespace hypspec {

// Exponent and norm of the potential class, plus an optional sampled profile
// for modules that need pointwise values.
struct PotentialSpec {
    double r = 2.0;
    double v_norm = 0.0;
    std::optional<RadialPotential> profile;
};

// Outcome of an exclusion certificate at a single spectral point.  The
// inequality is evaluated in log space; lhs/rhs are the exponentiated values
// and may overflow to inf for extreme exponents while the logs stay usable.
struct EnclosureVerdict {
    Complex lambda;
    double lhs = 0.0;
    double rhs = 0.0;
    double log_lhs = 0.0;
    double log_rhs = 0.0;
    bool excluded = false;
};

// Operator norm of the free resolvent at lambda = psi_p(z).  Exact for p = 2,
// an upper bound otherwise.  Requires Re z > 0.
double resolvent_norm_bound(const SpectralParams& params, Complex z);

// Operator norm budget for V(-Delta_p - lambda)^{-1} with a bounded
// potential.  Requires p >= 2, Re z > 0, v_inf >= 0.
double bs_opnorm_bound(const SpectralParams& params, Complex z, double v_inf);

// Summing-norm budgets for the Birman-Schwinger operator, 2 <= p <= r.
// power_p is the p-summing norm raised to the p-th power and is only defined
// when r == p (for p = 2 it is the squared Hilbert-Schmidt budget); summing
// bounds the (r,p)-summing norm itself and simplified is its coarser
// closed-form majorant.
struct SummingBounds {
    std::optional<double> power_p;
    double summing = 0.0;
    double simplified = 0.0;
};
SummingBounds bs_summing_bound(const SpectralParams& params, Complex z,
                               const PotentialSpec& pot);

// Eigenvalue-exclusion certificate for p = 2.  Requires pot.r >= 2 and
// lambda off [1/4, inf); excluded = true proves lambda is not a discrete
// eigenvalue for any potential with the given norm.
EnclosureVerdict l2_exclusion_certificate(const PotentialSpec& pot, Complex lambda);

// Eigenvalue-exclusion certificate for p != 2.  Requires
// pot.r >= max(p, p'), max(p, p') > 2 and lambda outside the spectral
// region; invariant under p <-> p'.
EnclosureVerdict lp_exclusion_certificate(const SpectralParams& params,
                                          const PotentialSpec& pot, Complex lambda);

// Rasterized candidate-eigenvalue zone: cells is row-major over ny rows of nx
// samples at cell centers, true where lambda is in the spectral region or the
// certificate fails to exclude it.
struct EnclosureMask {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    int nx = 0, ny = 0;
    std::vector<std::uint8_t> cells;

    bool at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * nx + ix] != 0; }
};

EnclosureMask enclosure_region(const SpectralParams& params, const PotentialSpec& pot,
                               double x0, double x1, double y0, double y1,
                               int nx, int ny);

// 0/1 grid, one row per line, top row = highest imaginary part.
std::string mask_csv(const EnclosureMask& mask);

}  // namespace hypspec
