#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "entanglekit/comparability.hpp"
#include "entanglekit/schmidt.hpp"

namespace entanglekit {

/// Which measure to pit against entropy when hunting for ordering flips.
enum class FlipMeasure {
  Concurrence,
  Negativity,
};

std::string to_string(FlipMeasure m);

struct SearchConfig {
  std::size_t rank = 3;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  FlipMeasure measure = FlipMeasure::Concurrence;
  /// Both orderings must hold by more than this margin for a pair to count.
  double strict_margin = 1e-9;
  /// When positive, the second vector of each candidate pair is nudged by a
  /// random tangent perturbation of this magnitude before testing.
  double perturb = 0.0;
  unsigned threads = 1;
};

/// One sampled pair where entropy and the chosen measure order the two states
/// in strictly opposite directions.
struct CounterexampleRecord {
  std::size_t index = 0;
  SchmidtVector vec_a;
  SchmidtVector vec_b;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double measure_a = 0.0;
  double measure_b = 0.0;
  ComparabilityResult classification;
};

/// Uniform draw from the ordered probability simplex of the given rank:
/// rank exponential variates, normalized, sorted descending.
SchmidtVector sample_simplex(std::size_t rank, std::mt19937_64& rng);

/// T-transform: moves f * (v[l] - v[s]) / 2 of probability mass from the
/// larger entry l to the smaller entry s, then re-sorts. At f = 1 the two
/// entries meet at their mean, so the result is always majorized by v.
/// Deterministic; the building block of random_majorized. Requires v[l] >= v[s].
SchmidtVector robin_hood_transfer(const SchmidtVector& v, std::size_t l, std::size_t s, double f);

/// Applies `steps` random Robin Hood transfers. The result u satisfies
/// u majorized by v, so u's state converts to v's under LOCC.
SchmidtVector random_majorized(const SchmidtVector& v, std::size_t steps, std::mt19937_64& rng);

/// Random perturbation of magnitude delta within the simplex (renormalized,
/// re-sorted). Used to probe near-ties.
SchmidtVector perturbed(const SchmidtVector& v, double delta, std::mt19937_64& rng);

/// Tests one pair for an entropy-vs-measure ordering flip. Returns a record
/// when E and M disagree strictly (both margins above strict_margin), nullopt
/// otherwise. A flip forces the pair to be LOCC-incomparable; if
/// classification says otherwise, monotonicity itself is broken and
/// PropertyViolation is thrown.
std::optional<CounterexampleRecord> check_pair(const SchmidtVector& a, const SchmidtVector& b,
                                               FlipMeasure measure, double strict_margin,
                                               std::size_t index = 0);

/// Scans cfg.samples independent pairs for ordering flips. Sample i draws
/// from substream(seed, i), so output is identical for any thread count.
/// Records are returned sorted by sample index.
std::vector<CounterexampleRecord> find_nonmonotonic_pairs(const SearchConfig& cfg);

struct MonotoneReport {
  std::size_t trials = 0;
  /// Pairs whose coefficients coincided within tolerance after transfers.
  std::size_t equivalent_pairs = 0;
  /// Pairs with a strict majorization relation (the interesting ones).
  std::size_t strict_pairs = 0;
  /// Largest |C^2(a) - C^2(b) - gap_formula(a, b)| observed.
  double max_gap_residual = 0.0;
};

/// Property check over random comparable pairs: draws v, mixes it into
/// u = random_majorized(v, steps) so that u converts to v under LOCC, then
/// requires E(u) >= E(v), C(u) >= C(v), N(u) >= N(v) up to 1e-12 slack and
/// the closed-form gap C^2(u) - C^2(v) to match the direct difference within
/// 1e-10. Throws PropertyViolation naming the offending pair.
MonotoneReport verify_monotone_on_comparable(std::size_t rank, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace entanglekit
