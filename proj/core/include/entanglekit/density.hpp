#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entanglekit/schmidt.hpp"

namespace entanglekit {

/// Real-amplitude pure state on an m x n product space. Amplitudes are
/// indexed row-major by the pair (i, j) of local basis labels.
struct PureStateVector {
  std::vector<double> amplitudes;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;

  double amp(std::size_t i, std::size_t j) const { return amplitudes[i * dim_b + j]; }
  double& amp(std::size_t i, std::size_t j) { return amplitudes[i * dim_b + j]; }
  double norm_squared() const;
};

/// Dense real square matrix with value semantics. Used for reduced and full
/// density matrices and their partial transposes; symmetry is a property of
/// how instances are produced, enforced where it is consumed.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  double& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  double trace() const;
  bool is_symmetric(double tol) const;
  /// Tr M^2 for symmetric M (sum of squared entries).
  double trace_of_square() const;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

/// Places sqrt(mu_i) on the (i, i) diagonal of an m x n amplitude grid.
/// Throws RankExceedsDims when the effective rank does not fit.
PureStateVector embed_state(const SchmidtVector& v, std::size_t dim_a, std::size_t dim_b);

/// Same embedding followed by a seeded random orthogonal rotation of each
/// local basis (20 Givens rotations per side), to exercise basis independence.
PureStateVector embed_state(const SchmidtVector& v, std::size_t dim_a, std::size_t dim_b,
                            std::uint64_t rotation_seed);

/// Partial trace over subsystem B: rho_A[i][i'] = sum_j amp(i,j) amp(i',j).
DensityMatrix reduce_a(const PureStateVector& s);

/// Full projector |s><s| on the mn-dimensional joint space.
DensityMatrix full_density(const PureStateVector& s);

/// Transposes the subsystem-A block indices of a joint-space matrix.
DensityMatrix partial_transpose_a(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b);

/**
 * All eigenvalues of a small real symmetric matrix, sorted descending.
 *
 * Cyclic Jacobi rotations; iterates until the off-diagonal Frobenius norm
 * drops below tol. Throws NotSymmetric if the input is not symmetric within
 * tol, NoConvergence if 100 sweeps do not suffice.
 */
std::vector<double> eig_sym(DensityMatrix m, double tol = 1e-12);

/// Negativity from first principles: diagonalizes the partial transpose of
/// |s><s| and returns |sum of negative eigenvalues|. The trace-norm form
/// (||rho^T_A||_1 - 1)/2 is computed alongside and must agree within 1e-10.
double negativity_via_pt(const PureStateVector& s);

/// Known partial-transpose spectrum of a pure state with Schmidt
/// coefficients mu: the multiset {mu_i} plus a pair +-sqrt(mu_i mu_j) for
/// each i < j, padded with zeros to dim_a * dim_b, sorted descending.
/// Invariant under local rotations, so it predicts eig_sym on any embedding.
std::vector<double> analytic_pt_spectrum(const SchmidtVector& v, std::size_t dim_a,
                                         std::size_t dim_b);

/// -sum lambda log2 lambda over eigenvalues above 1e-12.
double entropy_via_eigen(const DensityMatrix& rho);

/// sqrt(2 (1 - Tr rho_A^2)) evaluated on an explicit reduced density matrix.
double concurrence_via_reduced(const DensityMatrix& rho_a);

}  // namespace entanglekit
