#pragma once

#include <optional>

#include "hypspec/quadrature.hpp"
#include "hypspec/spectral_regions.hpp"

namespace hypspec {

/// C0 = (1 + (pi/2) coth(pi/2)) / (4 pi), the constant appearing in all
/// squared-L2 kernel bounds.  Roughly 0.216.
double c0_constant();

/// Resolvent kernel at geodesic distance d > 0,
///   G(d) = (1/(2^{3/2} pi)) int_d^inf e^{-r(s-1/2)} (cosh r - cosh d)^{-1/2} dr.
/// The substitution r = d + u^2 removes the endpoint singularity; the
/// integrand is evaluated in log form to stay stable for large arguments.
/// Truncated at u^2 = truncation_margin/(Re s - 1/2) with an analytic tail
/// check against rel_tol.
Complex green_eval(const SpectralPoint& pt, double d, const QuadratureConfig& cfg = {});

/// Exact supremum of the L1 norm of the kernel for lambda = Psi_1(z):
/// 1/(Re z (Re z + 1)).  Requires Re z > 0.
double l1_norm_exact(Complex z);

/// Digamma-based bound on sup_x ||G(x,.)||_2^2:
///   |Im psi(s)| / (2 pi |Im lambda|)   off the real axis,
///   psi'(s) / (4 pi (s - 1/2))         for real lambda.
double elstrodt_bound(const SpectralPoint& pt);

/// Weakened closed form of the previous bound: C0 / (|z + 1/2| Re z) with
/// z = s - 1/2, valid for all lambda off [1/4, inf).  Also a bound on the
/// squared L2 norm.
double l2_norm_bound(const SpectralPoint& pt);

/// Interpolated bound for 1 <= p < 2 and lambda = Psi_p(z):
///   C0^{1-1/p} (1/(Re z (Re z + 1/2)))^{1/p}.
/// Rejects p >= 2.
double lp_norm_bound(double p, Complex z);

/// Direct radial quadrature of the norm,
///   (2 pi int_0^inf sinh(r) |G(r)|^p dr)^{1/p},
/// used to check the closed-form bounds.  Requires p Re s > 1 (otherwise the
/// norm is infinite).
double measured_lp_norm(const SpectralPoint& pt, double p, const QuadratureConfig& cfg = {});

/// The closed-form norm quantities for one (p, z) pair.  lp_bound is absent
/// for p >= 2 where the interpolated bound does not apply.
struct KernelNormBudget {
    double c0;
    double l1_exact;
    double l2_bound;  // bound on the squared L2 norm
    std::optional<double> lp_bound;
};

KernelNormBudget kernel_norm_budget(const SpectralParams& pp, Complex z);

}  // namespace hypspec
