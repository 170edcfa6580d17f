#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hypspec/lieb_thirring.hpp"
#include "hypspec/potential.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/spectral_regions.hpp"

namespace hypspec {

// Discretized Birman-Schwinger operator for a radial potential at p = 2,
// restricted to the radial (angular mode 0) subspace.  matrix(i, j) equals
// V(d_i) w_j Kbar(d_i, d_j) with the diagonal carrying an extra correction
// that integrates the logarithmic kernel kink exactly; weights include the
// sinh area factor.
struct NystromOperator {
    std::vector<double> nodes;
    std::vector<double> weights;
    Eigen::MatrixXcd matrix;
    Complex lambda;
    std::vector<std::string> warnings;
};

// Regularized determinant of I - F over all eigenvalues of the matrix F,
// with ceil(r) - 1 exponential convergence terms.  Requires r >= 1.
Complex det_r(const Eigen::MatrixXcd& matrix, double r);

// Assembles the n-point radial discretization at spectral parameter lambda,
// which must stay at least 1e-3 away from [1/4, inf).  angular_points
// controls the midpoint rule for the angular kernel average.
NystromOperator assemble_bs(const RadialPotential& pot, Complex lambda, int n,
                            const QuadratureConfig& cfg = {},
                            int angular_points = 128);

// Similarity transform making the weight folding symmetric,
// sqrt(w_i) V_i Kbar_ij sqrt(w_j); shares the spectrum of op.matrix and its
// Frobenius norm estimates the operator's Hilbert-Schmidt norm.
Eigen::MatrixXcd symmetrized_matrix(const NystromOperator& op);

// Root condition for the eigenvalue search: det(I + M) exp(-tr M), equal to
// the 2-regularized determinant of -M.
Complex bs_determinant(const RadialPotential& pot, Complex lambda, int n,
                       const QuadratureConfig& cfg = {}, int angular_points = 128);

struct SearchBox {
    double x0 = -1.0;
    double x1 = 0.249;
    double y0 = 0.0;
    double y1 = 0.0;
};

struct OracleResult {
    EigenvalueList eigenvalues;
    std::vector<std::string> warnings;
};

// Locates zeros of the determinant condition inside the box: a real-axis
// sweep with bracketed bisection when the box and potential are real, a grid
// scan with Newton refinement otherwise.  Multiplicities come from the
// winding number of the determinant around each root.
OracleResult find_eigenvalues(const RadialPotential& pot, const SearchBox& box,
                              int n, const QuadratureConfig& cfg = {},
                              int angular_points = 128);

}  // namespace hypspec
