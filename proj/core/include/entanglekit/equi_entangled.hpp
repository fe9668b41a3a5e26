#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entanglekit/schmidt.hpp"

namespace entanglekit {

/// log2(3), the entropy ceiling for rank-3 states.
inline constexpr double kRank3MaxEntropy = 1.584962500721156;

struct CurveSpec {
  double target_entropy = 0.0;
  std::size_t points = 200;
};

/// One point of an equi-entangled rank-3 family, alpha1 >= alpha2 >= alpha3.
struct CurvePoint {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double concurrence = 0.0;
  double concurrence_squared = 0.0;
  double negativity = 0.0;
};

/// H(alpha1, alpha2, 1 - alpha1 - alpha2) in bits.
double rank3_entropy(double alpha1, double alpha2);

/**
 * Solves H(alpha1, alpha2) = target for alpha2 on the ordered branch
 * alpha2 in [(1 - alpha1)/2, min(alpha1, 1 - alpha1)], where H is strictly
 * decreasing in alpha2. Returns nullopt when the target lies outside the
 * branch's entropy range. Bisection to |H - target| <= tol, at most 200
 * iterations; a target within tol of a branch endpoint returns that endpoint.
 */
std::optional<double> solve_alpha2(double alpha1, double target_entropy, double tol = 1e-12);

struct Alpha1Range {
  double low = 0.0;
  double high = 0.0;
};

/// Interval of alpha1 values admitting a rank-3 state of the given entropy.
/// The boundary curves H_sym(a) = H(a, (1-a)/2) (upper) and
/// H_end(a) = H(a, min(a, 1-a)) (lower) are monotone in a on the relevant
/// side, so each endpoint is a bisection root. Throws InfeasibleTarget for
/// targets outside (0, log2 3).
Alpha1Range feasible_alpha1_range(double target_entropy, double tol = 1e-12);

/// Samples the equi-entangled family at `points` evenly spaced alpha1 values
/// across the feasible range. Concurrence is strictly decreasing along the
/// returned curve.
std::vector<CurvePoint> trace_curve(const CurveSpec& spec);

/// Two states from each of two equi-entangled families arranged so that
/// entropy cannot rank them by concurrence: E(a) = E(b) = e_low,
/// E(c) = E(d) = e_high, while C(a) = C(d) and C(b) = C(c) with
/// C(a) > C(c). The pairs (a, c) and (b, d) are LOCC-incomparable.
struct CrossingQuadruple {
  SchmidtVector a;
  SchmidtVector b;
  SchmidtVector c;
  SchmidtVector d;
  double c_match_high = 0.0;  ///< shared concurrence of a and d
  double c_match_low = 0.0;   ///< shared concurrence of b and c
};

/// Builds the quadruple for entropies e_low < e_high. Throws InfeasibleTarget
/// when either entropy is out of range or e_low >= e_high, NoOverlap (with
/// both measured concurrence ranges in the message) when the two families'
/// concurrence intervals do not intersect, and PropertyViolation if the
/// constructed pairs fail their classification postcondition.
CrossingQuadruple crossing_demo(double e_low, double e_high);

}  // namespace entanglekit
