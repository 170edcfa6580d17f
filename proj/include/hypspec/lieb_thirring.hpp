#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypspec/spectral_regions.hpp"

namespace hypspec {

// Exponent configuration for the abstract eigenvalue-sum engine.  The
// derived deltas and the regime-split radius eta are computed on
// construction.
struct LTParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double r = 2.0;
    double tau = 0.5;
    double c1 = 1.0;

    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;
    double delta4 = 0.0;
    double eta = 0.0;

    LTParams(double alpha_, double beta_, double gamma_, double r_, double tau_,
             double c1_);
};

struct Eigenvalue {
    Complex lambda;
    int mult = 1;
};

// Immutable eigenvalue enumeration; construction rejects entries inside the
// spectral region or with non-positive multiplicity.
class EigenvalueList {
  public:
    EigenvalueList(const SpectralParams& params, std::vector<Eigenvalue> entries);

    const SpectralParams& params() const { return params_; }
    const std::vector<Eigenvalue>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

  private:
    SpectralParams params_;
    std::vector<Eigenvalue> entries_;
};

// The unspecified theorem constants; with the defaults the reports carry
// sum/budget ratios rather than calibrated pass/fail verdicts.
struct LTConstants {
    double c = 1.0;
    double c_prime = 1.0;
};

// One evaluated eigenvalue-sum inequality pair.  split_threshold lives on
// the |lambda - vertex|^{1/2} scale; counts are multiplicity-weighted.
struct LTReport {
    double small_sum = 0.0;
    double small_budget = 0.0;
    double large_sum = 0.0;
    double large_budget = 0.0;
    double split_threshold = 0.0;
    bool small_satisfied = true;
    bool large_satisfied = true;
    double small_ratio = 0.0;
    double large_ratio = 0.0;
    long small_count = 0;
    long large_count = 0;
    std::map<std::string, double> exponents;
};

// Conformal map from the unit disk onto the right half-plane, w = 0 -> a.
Complex phi_a(double a, Complex w);
// Inverse map (a - z)/(a + z); requires Re z > 0.
Complex phi_a_inv(double a, Complex z);

struct Ineq {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Evaluated comparison inequalities between half-plane and disk data for
// z = phi_a(w): the spectral-image gap bound, the two-sided Re z bounds and
// the two-sided bound linking 1 - |w| to the spectral distance.
struct TransplantBounds {
    Ineq image_gap;
    Ineq re_lower;
    Ineq re_upper;
    Ineq radius_lower;
    Ineq radius_upper;
};
TransplantBounds disk_transplant_bounds(const SpectralParams& params, double a,
                                        Complex w);

struct DiskZero {
    Complex w;
    int order = 1;
};

// Weighted zero-set power sum sum_j order_j (1-|w_j|)^{e1} |1-w_j|^{e2}
// |1+w_j|^{e3}; zero exponents contribute factor 1 even at the boundary.
double blaschke_power_sum(const std::vector<DiskZero>& zeros, double e1, double e2,
                          double e3);

// Abstract engine: splits the eigenvalues at |lambda - vertex|^{1/2} = eta
// and evaluates the two regime sums against their budgets.
LTReport regime_split_sums(const LTParams& lt, const EigenvalueList& evs,
                           const LTConstants& consts = {});

// Concrete p = 2 eigenvalue-sum inequalities; the small-modulus branch shape
// switches at r = 3 - tau.
LTReport l2_eigenvalue_sums(double r, double tau, double v_norm,
                            const EigenvalueList& evs, const LTConstants& consts = {});

// Concrete p != 2 inequalities; p < 2 is mapped to its conjugate.  eps0 caps
// the auxiliary exponent shift eps(r).
LTReport lp_eigenvalue_sums(double p, double r, double tau, double eps0,
                            double v_norm, const EigenvalueList& evs,
                            const LTConstants& consts = {});

}  // namespace hypspec
