#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entanglekit/schmidt.hpp"

namespace entanglekit {

/// Tolerance for comparing partial sums of Schmidt coefficients.
inline constexpr double kPrefixTol = 1e-12;

enum class Comparability {
  Equivalent,
  AConvertsToB,
  BConvertsToA,
  Incomparable,
};

std::string to_string(Comparability c);

/// Classification outcome. Witness indices are 1-based prefix lengths and
/// only meaningful for Incomparable: witness_a_over is the first k where A's
/// partial sum strictly exceeds B's, witness_b_over the first k the other way.
struct ComparabilityResult {
  Comparability tag = Comparability::Equivalent;
  std::size_t witness_a_over = 0;
  std::size_t witness_b_over = 0;
};

/// Coefficients of v extended with zeros to length m.
/// Throws TargetShorterThanInput if m < v.size().
std::vector<double> pad(const SchmidtVector& v, std::size_t m);

/// True when a is majorized by b: every prefix sum of a is at most the
/// corresponding prefix sum of b plus tol. a majorized by b means the state
/// with coefficients a converts to the one with coefficients b under LOCC.
bool is_majorized_by(const SchmidtVector& a, const SchmidtVector& b, double tol = kPrefixTol);

ComparabilityResult classify(const SchmidtVector& a, const SchmidtVector& b,
                             double tol = kPrefixTol);

/// Prefix-sum difference profile for a convertible pair.
///
/// eps[k] = P_b(k) - P_a(k) for k = 0..m where m is the padded length; the
/// endpoints are exactly zero by construction. Requires a majorized by b
/// (throws NotComparableInDirection otherwise). Interior values are the raw
/// differences, not clamped, so tiny negatives within tolerance survive.
struct EpsilonProfile {
  std::vector<double> eps;
};

EpsilonProfile epsilon_profile(const SchmidtVector& a, const SchmidtVector& b,
                               double tol = kPrefixTol);

/// Closed-form concurrence-squared gap C^2(a) - C^2(b) for a majorized by b,
/// evaluated from the epsilon profile:
///
///   2 * ( 2 * sum_i (alpha_i - alpha_{i+1}) eps_i + sum_i (eps_i - eps_{i-1})^2 )
///
/// with alpha the padded coefficients of a and alpha_{m+1} = 0. Nonnegative
/// whenever the majorization precondition holds.
double concurrence_gap(const SchmidtVector& a, const SchmidtVector& b, double tol = kPrefixTol);

}  // namespace entanglekit
