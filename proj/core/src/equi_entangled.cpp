#include "entanglekit/equi_entangled.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "entanglekit/comparability.hpp"
#include "entanglekit/errors.hpp"
#include "num_format.hpp"

namespace entanglekit {

namespace {

double h(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

/// Entropy of the symmetric branch endpoint (alpha2 = alpha3), the largest
/// value attainable at this alpha1. Strictly decreasing on (1/3, 1).
double h_sym(double a) { return rank3_entropy(a, (1.0 - a) / 2.0); }

/// Entropy of the ordered-branch far endpoint (alpha2 = min(alpha1, 1-alpha1)),
/// the smallest value attainable. Strictly decreasing on (1/3, 1).
double h_end(double a) { return rank3_entropy(a, std::min(a, 1.0 - a)); }

/// Root of a strictly decreasing boundary curve f on [1/3, 1). Maintains
/// f(lo) >= target >= f(hi) and returns the endpoint of the final bracket on
/// the side where the target is still attainable.
enum class BracketSide { Low, High };

double boundary_root(double (*f)(double), double target, BracketSide keep) {
  double lo = 1.0 / 3.0;
  double hi = 1.0 - 1e-12;
  if (f(lo) <= target) return lo;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return keep == BracketSide::Low ? lo : hi;
}

SchmidtVector curve_state(double alpha1, double target_entropy) {
  auto alpha2 = solve_alpha2(alpha1, target_entropy);
  if (!alpha2) {
    throw PropertyViolation("grid point alpha1 = " + detail::num(alpha1) +
                            " escaped the feasible range of target " +
                            detail::num(target_entropy));
  }
  double a2 = *alpha2;
  double a3 = std::max(0.0, 1.0 - alpha1 - a2);
  if (a3 > a2) {
    // Rounding at the symmetric endpoint can leave a3 a few ulps above a2;
    // meeting at the mean preserves the unit sum.
    a2 = a3 = 0.5 * (a2 + a3);
  }
  return SchmidtVector::from_raw({alpha1, a2, a3});
}

double curve_c2(double alpha1, double target_entropy) {
  return concurrence_squared(curve_state(alpha1, target_entropy));
}

void require_feasible_entropy(double target) {
  if (!(target > 0.0) || target >= kRank3MaxEntropy) {
    throw InfeasibleTarget("target entropy " + detail::num(target) +
                           " outside (0, log2 3)");
  }
}

}  // namespace

double rank3_entropy(double alpha1, double alpha2) {
  double alpha3 = std::max(0.0, 1.0 - alpha1 - alpha2);
  return h(alpha1) + h(alpha2) + h(alpha3);
}

std::optional<double> solve_alpha2(double alpha1, double target_entropy, double tol) {
  if (!(alpha1 > 0.0) || alpha1 >= 1.0) return std::nullopt;
  double lo = (1.0 - alpha1) / 2.0;
  double hi = std::min(alpha1, 1.0 - alpha1);
  if (lo > hi) {
    // alpha1 below 1/3 admits no ordered branch. Right at 1/3 the branch is a
    // single symmetric point and rounding can leave lo an ulp above hi.
    if (lo - hi > 1e-12) return std::nullopt;
    lo = hi;
  }

  // H is strictly decreasing in alpha2 across (lo, hi]: the branch maximum
  // sits at the symmetric point, the minimum at the far end.
  double h_at_lo = rank3_entropy(alpha1, lo);
  double h_at_hi = rank3_entropy(alpha1, hi);
  if (target_entropy > h_at_lo + tol || target_entropy < h_at_hi - tol) return std::nullopt;
  if (std::abs(target_entropy - h_at_lo) <= tol) return lo;
  if (std::abs(target_entropy - h_at_hi) <= tol) return hi;

  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double hm = rank3_entropy(alpha1, mid);
    if (std::abs(hm - target_entropy) <= tol) return mid;
    if (hm > target_entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Alpha1Range feasible_alpha1_range(double target_entropy, double tol) {
  require_feasible_entropy(target_entropy);

  // high: where the symmetric (branch-maximum) boundary drops to the target;
  // keep the bracket side on which the target is still reachable.
  double high = boundary_root(&h_sym, target_entropy, BracketSide::Low);
  // low: where the far-end (branch-minimum) boundary drops to the target.
  double low = boundary_root(&h_end, target_entropy, BracketSide::High);

  constexpr double kProbeOffset = 1e-12;
  if (high - low > 10.0 * kProbeOffset) {
    if (!solve_alpha2(low + kProbeOffset, target_entropy, tol) ||
        !solve_alpha2(high - kProbeOffset, target_entropy, tol)) {
      throw PropertyViolation("feasible range probe failed just inside [" +
                              detail::num(low) + ", " + detail::num(high) + "]");
    }
  }
  return {low, high};
}

std::vector<CurvePoint> trace_curve(const CurveSpec& spec) {
  if (spec.points < 2) {
    throw Error("curve grid needs at least 2 points");
  }
  Alpha1Range range = feasible_alpha1_range(spec.target_entropy);
  std::vector<CurvePoint> curve;
  curve.reserve(spec.points);
  double span = range.high - range.low;
  for (std::size_t i = 0; i < spec.points; ++i) {
    double frac = static_cast<double>(i) / static_cast<double>(spec.points - 1);
    double alpha1 = range.low + span * frac;
    SchmidtVector v = curve_state(alpha1, spec.target_entropy);
    MeasureSet m = measures(v);
    curve.push_back({v[0], v[1], v[2], m.concurrence, m.concurrence_squared, m.negativity});
  }
  return curve;
}

CrossingQuadruple crossing_demo(double e_low, double e_high) {
  require_feasible_entropy(e_low);
  require_feasible_entropy(e_high);
  if (e_low >= e_high) {
    throw InfeasibleTarget("crossing requires e_low < e_high, got " + detail::num(e_low) +
                           " and " + detail::num(e_high));
  }

  // Concurrence squared is strictly decreasing in alpha1 along each curve, so
  // a curve's C^2 range is spanned by its alpha1 endpoints.
  Alpha1Range r_low = feasible_alpha1_range(e_low);
  Alpha1Range r_high = feasible_alpha1_range(e_high);
  double low_c2_min = curve_c2(r_low.high, e_low);
  double low_c2_max = curve_c2(r_low.low, e_low);
  double high_c2_min = curve_c2(r_high.high, e_high);
  double high_c2_max = curve_c2(r_high.low, e_high);

  double olo = std::max(low_c2_min, high_c2_min);
  double ohi = std::min(low_c2_max, high_c2_max);
  if (olo >= ohi) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "concurrence-squared ranges do not overlap: curve E = " << e_low << " spans ["
        << low_c2_min << ", " << low_c2_max << "], curve E = " << e_high << " spans ["
        << high_c2_min << ", " << high_c2_max << "]";
    throw NoOverlap(msg.str());
  }

  double width = ohi - olo;
  double c2_high_match = ohi - 0.25 * width;  // becomes C^2(a) = C^2(d)
  double c2_low_match = olo + 0.25 * width;   // becomes C^2(b) = C^2(c)

  // Inverts alpha1 -> C^2 on one curve by bisection on the exact solver.
  auto invert = [](double target_entropy, const Alpha1Range& r, double c2_target) {
    double lo = r.low, hi = r.high;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      double mid = 0.5 * (lo + hi);
      if (curve_c2(mid, target_entropy) >= c2_target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return curve_state(0.5 * (lo + hi), target_entropy);
  };

  CrossingQuadruple q{invert(e_low, r_low, c2_high_match), invert(e_low, r_low, c2_low_match),
                      invert(e_high, r_high, c2_low_match), invert(e_high, r_high, c2_high_match),
                      std::sqrt(c2_high_match), std::sqrt(c2_low_match)};

  ComparabilityResult ac = classify(q.a, q.c);
  ComparabilityResult bd = classify(q.b, q.d);
  if (ac.tag != Comparability::Incomparable || bd.tag != Comparability::Incomparable) {
    throw PropertyViolation("crossing quadruple failed incomparability: (a, c) is " +
                            to_string(ac.tag) + ", (b, d) is " + to_string(bd.tag));
  }
  return q;
}

}  // namespace entanglekit
