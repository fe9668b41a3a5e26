#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entanglekit/errors.hpp"

namespace entanglekit {

/// Default tolerance on |sum - 1| when accepting an unnormalized input.
inline constexpr double kNormTol = 1e-9;
/// Coefficients at or below this threshold do not count toward the effective rank.
inline constexpr double kZeroTol = 1e-12;

/// Sorted probability vector of squared Schmidt coefficients describing a
/// pure bipartite state up to local unitaries.
///
/// Coefficients are stored in non-increasing order and sum to one. Trailing
/// zeros are kept (padding matters when comparing vectors of different
/// declared rank) but are excluded from the effective rank.
class SchmidtVector {
 public:
  /// Builds a vector from raw coefficients in any order.
  ///
  /// Entries in [-norm_tol, 0) are clamped to zero; anything more negative
  /// throws NegativeCoefficient. With normalize=false the input must already
  /// sum to 1 within norm_tol, otherwise it is rescaled by its sum.
  static SchmidtVector from_raw(std::vector<double> raw, bool normalize = false,
                                double norm_tol = kNormTol, double zero_tol = kZeroTol);

  std::span<const double> coeffs() const { return coeffs_; }
  /// Declared rank, trailing zeros included.
  std::size_t size() const { return coeffs_.size(); }
  /// Number of coefficients above the zero threshold; at least 1.
  std::size_t effective_rank() const { return effective_rank_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double zero_tol() const { return zero_tol_; }

  friend bool operator==(const SchmidtVector& a, const SchmidtVector& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  SchmidtVector(std::vector<double> coeffs, std::size_t effective_rank, double zero_tol)
      : coeffs_(std::move(coeffs)), effective_rank_(effective_rank), zero_tol_(zero_tol) {}

  std::vector<double> coeffs_;
  std::size_t effective_rank_;
  double zero_tol_;
};

/// All closed-form measures of one state, evaluated together.
struct MeasureSet {
  double entropy;              ///< e-bits
  double concurrence;
  double concurrence_squared;
  double negativity;
  double purity;               ///< of the reduced state
  std::size_t effective_rank;
};

/// Von Neumann entropy of the reduced state, -sum mu log2 mu, in e-bits.
/// The 0 log 0 limit is taken as 0, so padded zeros contribute nothing.
double entropy_of_entanglement(const SchmidtVector& v);

/// 2 (1 - sum mu^2); ranges from 0 (product state) to 2(k-1)/k (maximally
/// entangled at effective rank k).
double concurrence_squared(const SchmidtVector& v);

double concurrence(const SchmidtVector& v);

/// ((sum sqrt(mu))^2 - 1) / 2.
double negativity(const SchmidtVector& v);

/// sum mu^2 = Tr rho_A^2.
double purity(const SchmidtVector& v);

MeasureSet measures(const SchmidtVector& v);

}  // namespace entanglekit
