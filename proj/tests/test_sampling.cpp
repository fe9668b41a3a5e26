#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "doctest.h"
#include "entanglekit/comparability.hpp"
#include "entanglekit/rng.hpp"
#include "entanglekit/sampling.hpp"
#include "entanglekit/schmidt.hpp"

using namespace entanglekit;

namespace {

SchmidtVector make(std::vector<double> raw) { return SchmidtVector::from_raw(std::move(raw)); }

const SchmidtVector kPsi2 = make({0.43, 0.3645, 0.2055});
const SchmidtVector kPhi2 = make({0.46, 0.3061, 0.2339});

}  // namespace

TEST_CASE("substream generators are reproducible and index-separated") {
  std::mt19937_64 a = substream(42, 7);
  std::mt19937_64 b = substream(42, 7);
  std::mt19937_64 c = substream(42, 8);
  for (int i = 0; i < 32; ++i) CHECK(a() == b());
  bool any_diff = false;
  std::mt19937_64 a2 = substream(42, 7);
  for (int i = 0; i < 32; ++i) any_diff |= (a2() != c());
  CHECK(any_diff);
}

TEST_CASE("unit_uniform stays in [0,1) and open_unit_uniform in (0,1)") {
  std::mt19937_64 g = substream(3, 0);
  for (int i = 0; i < 10000; ++i) {
    double u = unit_uniform(g);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double o = open_unit_uniform(g);
    CHECK(o > 0.0);
    CHECK(o < 1.0);
  }
}

TEST_CASE("sample_simplex returns sorted unit-sum coefficient vectors") {
  std::mt19937_64 g = substream(11, 0);
  SchmidtVector single = sample_simplex(1, g);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 1.0);

  for (int rep = 0; rep < 200; ++rep) {
    SchmidtVector v = sample_simplex(2 + rep % 5, g);
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] > 0.0);
      if (i > 0) CHECK(v[i] <= v[i - 1]);
      sum += v[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rank-3 order statistics match the flat-simplex means") {
  // Sorted uniform Dirichlet(1,1,1) components have means 11/18, 5/18, 2/18.
  std::mt19937_64 g = substream(123, 0);
  const int n = 100000;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    SchmidtVector v = sample_simplex(3, g);
    s0 += v[0];
    s1 += v[1];
    s2 += v[2];
  }
  CHECK(s0 / n == doctest::Approx(11.0 / 18.0).epsilon(0.02));
  CHECK(s1 / n == doctest::Approx(5.0 / 18.0).epsilon(0.02));
  CHECK(s2 / n == doctest::Approx(2.0 / 18.0).epsilon(0.02));
}

TEST_CASE("robin_hood_transfer moves mass from the larger to the smaller entry") {
  SchmidtVector top = make({1.0, 0.0});
  SchmidtVector half = robin_hood_transfer(top, 0, 1, 0.5);
  CHECK(half[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(half[1] == doctest::Approx(0.25).epsilon(1e-15));

  SchmidtVector skew = make({0.8, 0.2});
  SchmidtVector met = robin_hood_transfer(skew, 0, 1, 1.0);
  CHECK(met[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(met[1] == doctest::Approx(0.5).epsilon(1e-15));

  SchmidtVector same = robin_hood_transfer(skew, 0, 1, 0.0);
  CHECK(same == skew);

  SchmidtVector flat = make({0.25, 0.25, 0.25, 0.25});
  CHECK(robin_hood_transfer(flat, 1, 3, 0.7) == flat);
}

TEST_CASE("robin_hood_transfer output is majorized by its input") {
  std::mt19937_64 g = substream(17, 0);
  for (int rep = 0; rep < 500; ++rep) {
    SchmidtVector v = sample_simplex(2 + rep % 5, g);
    std::size_t l = 0;
    std::size_t s = v.size() - 1;
    double f = unit_uniform(g);
    SchmidtVector u = robin_hood_transfer(v, l, s, f);
    CHECK(is_majorized_by(u, v));
  }
}

TEST_CASE("random_majorized yields LOCC-convertible pairs") {
  std::mt19937_64 g = substream(29, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    SchmidtVector v = sample_simplex(2 + rep % 5, g);
    SchmidtVector u = random_majorized(v, 1 + rep % 3, g);
    REQUIRE(is_majorized_by(u, v));
    Comparability tag = classify(u, v).tag;
    bool convertible = tag == Comparability::AConvertsToB || tag == Comparability::Equivalent;
    CHECK(convertible);
  }
}

TEST_CASE("check_pair flags the crossing fixture and not the aligned one") {
  std::optional<CounterexampleRecord> flagged =
      check_pair(kPsi2, kPhi2, FlipMeasure::Concurrence, 1e-9, 3);
  REQUIRE(flagged.has_value());
  CHECK(flagged->index == 3);
  CHECK(flagged->classification.tag == Comparability::Incomparable);
  CHECK((flagged->entropy_a - flagged->entropy_b) * (flagged->measure_a - flagged->measure_b) <
        0.0);
  CHECK(flagged->measure_a == doctest::Approx(concurrence_squared(kPsi2)).epsilon(1e-15));

  SchmidtVector psi1 = make({0.46, 0.306, 0.234});
  SchmidtVector phi1 = make({0.43, 0.3646, 0.2054});
  CHECK_FALSE(check_pair(psi1, phi1, FlipMeasure::Concurrence, 1e-9).has_value());
}

TEST_CASE("check_pair honors the strict margin") {
  // The concurrence-squared ordering only holds by ~3.2e-5, so a coarse
  // margin must filter the pair out.
  CHECK(check_pair(kPsi2, kPhi2, FlipMeasure::Concurrence, 1e-9).has_value());
  CHECK_FALSE(check_pair(kPsi2, kPhi2, FlipMeasure::Concurrence, 1e-3).has_value());
}

TEST_CASE("to_string names both flip measures") {
  CHECK(to_string(FlipMeasure::Concurrence) == "concurrence");
  CHECK(to_string(FlipMeasure::Negativity) == "negativity");
}

TEST_CASE("rank-2 searches find nothing for either measure") {
  SearchConfig cfg;
  cfg.rank = 2;
  cfg.samples = 10000;
  cfg.seed = 7;
  cfg.measure = FlipMeasure::Concurrence;
  CHECK(find_nonmonotonic_pairs(cfg).empty());
  cfg.measure = FlipMeasure::Negativity;
  CHECK(find_nonmonotonic_pairs(cfg).empty());
}

TEST_CASE("rank-3 searches find flips and report them in index order") {
  SearchConfig cfg;
  cfg.rank = 3;
  cfg.samples = 4000;
  cfg.seed = 42;
  std::vector<CounterexampleRecord> hits = find_nonmonotonic_pairs(cfg);
  REQUIRE(!hits.empty());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i > 0) CHECK(hits[i].index > hits[i - 1].index);
    CHECK(hits[i].classification.tag == Comparability::Incomparable);
    CHECK((hits[i].entropy_a - hits[i].entropy_b) * (hits[i].measure_a - hits[i].measure_b) < 0.0);
  }
}

TEST_CASE("thread count never changes the search output") {
  SearchConfig cfg;
  cfg.rank = 3;
  cfg.samples = 6000;
  cfg.seed = 99;
  cfg.measure = FlipMeasure::Negativity;
  cfg.threads = 1;
  std::vector<CounterexampleRecord> serial = find_nonmonotonic_pairs(cfg);
  cfg.threads = 3;
  std::vector<CounterexampleRecord> parallel = find_nonmonotonic_pairs(cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].index == parallel[i].index);
    CHECK(serial[i].vec_a == parallel[i].vec_a);
    CHECK(serial[i].vec_b == parallel[i].vec_b);
    CHECK(serial[i].measure_a == parallel[i].measure_a);
  }
}

TEST_CASE("perturbed pairs stay on the simplex") {
  SearchConfig cfg;
  cfg.rank = 3;
  cfg.samples = 2000;
  cfg.seed = 5;
  cfg.perturb = 1e-3;
  std::vector<CounterexampleRecord> hits = find_nonmonotonic_pairs(cfg);
  for (const CounterexampleRecord& rec : hits) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rec.vec_b.size(); ++i) sum += rec.vec_b[i];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("monotonicity holds on comparable pairs at the rank extremes") {
  MonotoneReport r2 = verify_monotone_on_comparable(2, 5000, 1234);
  CHECK(r2.trials == 5000);
  CHECK(r2.equivalent_pairs + r2.strict_pairs == r2.trials);
  CHECK(r2.strict_pairs > 0);
  CHECK(r2.max_gap_residual <= 1e-10);

  MonotoneReport r6 = verify_monotone_on_comparable(6, 5000, 4321);
  CHECK(r6.trials == 5000);
  CHECK(r6.equivalent_pairs + r6.strict_pairs == r6.trials);
  CHECK(r6.max_gap_residual <= 1e-10);
}
