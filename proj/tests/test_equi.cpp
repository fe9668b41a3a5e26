#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "doctest.h"
#include "entanglekit/comparability.hpp"
#include "entanglekit/equi_entangled.hpp"
#include "entanglekit/errors.hpp"
#include "entanglekit/schmidt.hpp"

using namespace entanglekit;

namespace {

SchmidtVector state_of(const CurvePoint& p) {
  return SchmidtVector::from_raw({p.alpha1, p.alpha2, p.alpha3}, true);
}

}  // namespace

TEST_CASE("rank3_entropy hits the closed-form anchors") {
  CHECK(rank3_entropy(1.0 / 3.0, 1.0 / 3.0) ==
        doctest::Approx(kRank3MaxEntropy).epsilon(1e-15));
  CHECK(rank3_entropy(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rank3_entropy(0.5, 0.25) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(rank3_entropy(1.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("solve_alpha2 recovers the known fixture coefficients") {
  std::optional<double> uniform = solve_alpha2(1.0 / 3.0, kRank3MaxEntropy);
  REQUIRE(uniform.has_value());
  CHECK(*uniform == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  // Entropy of (0.46, 0.306, 0.234); the middle coefficient comes back.
  std::optional<double> a2_psi1 = solve_alpha2(0.46, 1.5284328369812064);
  REQUIRE(a2_psi1.has_value());
  CHECK(std::abs(*a2_psi1 - 0.306) <= 1e-6);

  // Entropy of (0.43, 0.3645, 0.2055).
  std::optional<double> a2_psi2 = solve_alpha2(0.43, 1.5233929833148647);
  REQUIRE(a2_psi2.has_value());
  CHECK(std::abs(*a2_psi2 - 0.3645) <= 1e-6);
}

TEST_CASE("solve_alpha2 solutions satisfy the equation to solver tolerance") {
  for (double a1 : {0.39, 0.40, 0.44}) {
    std::optional<double> a2 = solve_alpha2(a1, 1.547);
    REQUIRE(a2.has_value());
    CHECK(std::abs(rank3_entropy(a1, *a2) - 1.547) <= 1e-9);
    CHECK(*a2 <= a1 + 1e-12);
    CHECK(*a2 >= (1.0 - a1 - *a2) - 1e-12);
  }
}

TEST_CASE("solve_alpha2 returns nullopt off the branch") {
  // At alpha1 = 0.9 the branch tops out near H = 0.57.
  CHECK_FALSE(solve_alpha2(0.9, 1.5).has_value());
  // Branch entropy range at alpha1 = 0.4 is about [1.52, 1.58].
  CHECK_FALSE(solve_alpha2(0.4, 0.5).has_value());
  CHECK_FALSE(solve_alpha2(0.4, 1.59).has_value());
  CHECK_FALSE(solve_alpha2(1.0, 1.0).has_value());
}

TEST_CASE("solve_alpha2 snaps to a branch endpoint when the target sits on it") {
  double target = rank3_entropy(0.4, 0.3);  // symmetric endpoint alpha2 = alpha3 = 0.3
  std::optional<double> a2 = solve_alpha2(0.4, target);
  REQUIRE(a2.has_value());
  CHECK(std::abs(*a2 - 0.3) <= 1e-9);
}

TEST_CASE("feasible_alpha1_range matches frozen endpoints for E = 1.545") {
  Alpha1Range r = feasible_alpha1_range(1.545);
  CHECK(std::abs(r.low - 0.386982579) <= 1e-8);
  CHECK(std::abs(r.high - 0.446826268) <= 1e-8);
  CHECK(r.low < r.high);
}

TEST_CASE("feasible range brackets the fixture state") {
  // (0.46, 0.306, 0.234) must lie on its own equi-entangled curve.
  double e = 1.5284328369812064;
  Alpha1Range r = feasible_alpha1_range(e);
  CHECK(r.low <= 0.46);
  CHECK(r.high >= 0.46);
  std::optional<double> a2 = solve_alpha2(0.46, e);
  REQUIRE(a2.has_value());
  CHECK(std::abs(*a2 - 0.306) <= 1e-6);
}

TEST_CASE("feasible_alpha1_range rejects out-of-range targets") {
  CHECK_THROWS_AS(feasible_alpha1_range(0.0), InfeasibleTarget);
  CHECK_THROWS_AS(feasible_alpha1_range(-0.25), InfeasibleTarget);
  CHECK_THROWS_AS(feasible_alpha1_range(kRank3MaxEntropy), InfeasibleTarget);
  CHECK_THROWS_AS(feasible_alpha1_range(1.6), InfeasibleTarget);
}

TEST_CASE("the feasible range collapses toward 1/3 as the target nears log2 3") {
  Alpha1Range r = feasible_alpha1_range(1.5849);
  CHECK(r.low >= 1.0 / 3.0 - 1e-9);
  CHECK(r.high - r.low < 0.02);
  CHECK(r.low < r.high);
}

TEST_CASE("trace_curve keeps entropy constant and concurrence strictly decreasing") {
  std::vector<CurvePoint> curve = trace_curve({1.547, 200});
  REQUIRE(curve.size() == 200);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const CurvePoint& p = curve[i];
    CHECK(p.alpha1 >= p.alpha2);
    CHECK(p.alpha2 >= p.alpha3);
    CHECK(p.alpha3 >= 0.0);
    CHECK(p.alpha1 + p.alpha2 + p.alpha3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(rank3_entropy(p.alpha1, p.alpha2) - 1.547) <= 1e-9);
    CHECK(p.concurrence == doctest::Approx(std::sqrt(p.concurrence_squared)).epsilon(1e-14));

    SchmidtVector v = state_of(p);
    CHECK(std::abs(p.concurrence_squared - concurrence_squared(v)) <= 1e-12);
    CHECK(std::abs(p.negativity - negativity(v)) <= 1e-12);

    if (i > 0) {
      CHECK(p.alpha1 > curve[i - 1].alpha1);
      CHECK(p.concurrence_squared < curve[i - 1].concurrence_squared);
    }
  }
}

TEST_CASE("trace_curve spans the feasible range uniformly in alpha1") {
  std::vector<CurvePoint> curve = trace_curve({1.550, 120});
  Alpha1Range r = feasible_alpha1_range(1.550);
  REQUIRE(curve.size() == 120);
  CHECK(std::abs(curve.front().alpha1 - r.low) <= 1e-12);
  CHECK(std::abs(curve.back().alpha1 - r.high) <= 1e-12);
  double step = (r.high - r.low) / 119.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(std::abs(curve[i].alpha1 - curve[i - 1].alpha1 - step) <= 1e-12);
  }
}

TEST_CASE("the curve is continuous against its own slope field") {
  // dalpha2/dalpha1 along the level set is -log2(a3/a1) / log2(a3/a2); the
  // allowed per-cell move budgets 10x the left-endpoint slope plus a 1/2 to
  // absorb the square-root steepening where alpha2 meets alpha3.
  std::vector<CurvePoint> curve = trace_curve({1.545, 400});
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const CurvePoint& l = curve[i - 1];
    double d1 = curve[i].alpha1 - l.alpha1;
    double d2 = std::abs(curve[i].alpha2 - l.alpha2);
    double denom = std::log2(l.alpha3 / l.alpha2);
    if (denom == 0.0) continue;
    double t = -std::log2(l.alpha3 / l.alpha1) / denom;
    CHECK(d2 <= 10.0 * d1 * (0.5 + std::abs(t)));
  }
}

TEST_CASE("trace_curve wants at least two points") {
  CHECK_THROWS_AS(trace_curve({1.547, 1}), Error);
  CHECK_THROWS_AS(trace_curve({1.6, 50}), InfeasibleTarget);
}

TEST_CASE("crossing_demo builds a concurrence-matched quadruple") {
  CrossingQuadruple q = crossing_demo(1.547, 1.550);

  CHECK(std::abs(entropy_of_entanglement(q.a) - 1.547) <= 1e-9);
  CHECK(std::abs(entropy_of_entanglement(q.b) - 1.547) <= 1e-9);
  CHECK(std::abs(entropy_of_entanglement(q.c) - 1.550) <= 1e-9);
  CHECK(std::abs(entropy_of_entanglement(q.d) - 1.550) <= 1e-9);

  CHECK(std::abs(concurrence(q.a) - concurrence(q.d)) <= 1e-8);
  CHECK(std::abs(concurrence(q.b) - concurrence(q.c)) <= 1e-8);
  CHECK(std::abs(concurrence(q.a) - q.c_match_high) <= 1e-8);
  CHECK(std::abs(concurrence(q.b) - q.c_match_low) <= 1e-8);
  CHECK(concurrence(q.a) > concurrence(q.c));
  CHECK(q.c_match_high > q.c_match_low);

  CHECK(classify(q.a, q.c).tag == Comparability::Incomparable);
  CHECK(classify(q.b, q.d).tag == Comparability::Incomparable);
}

TEST_CASE("crossing_demo rejects bad entropy arguments") {
  CHECK_THROWS_AS(crossing_demo(1.550, 1.547), InfeasibleTarget);
  CHECK_THROWS_AS(crossing_demo(1.547, 1.547), InfeasibleTarget);
  CHECK_THROWS_AS(crossing_demo(-0.5, 1.0), InfeasibleTarget);
  CHECK_THROWS_AS(crossing_demo(1.0, 1.7), InfeasibleTarget);
}

TEST_CASE("crossing_demo reports disjoint concurrence ranges as NoOverlap") {
  CHECK_THROWS_AS(crossing_demo(1.545, 1.550), NoOverlap);
  try {
    crossing_demo(1.545, 1.550);
  } catch (const NoOverlap& e) {
    std::string msg = e.what();
    CHECK(msg.find("1.545") != std::string::npos);
    CHECK(msg.find("1.55") != std::string::npos);
  }
}
