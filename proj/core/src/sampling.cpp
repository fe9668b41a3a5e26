#include "entanglekit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "entanglekit/errors.hpp"
#include "entanglekit/rng.hpp"

namespace entanglekit {

std::string to_string(FlipMeasure m) {
  return m == FlipMeasure::Concurrence ? "concurrence" : "negativity";
}

SchmidtVector sample_simplex(std::size_t rank, std::mt19937_64& rng) {
  std::vector<double> raw(rank);
  for (double& x : raw) x = -std::log(open_unit_uniform(rng));
  return SchmidtVector::from_raw(std::move(raw), /*normalize=*/true);
}

SchmidtVector robin_hood_transfer(const SchmidtVector& v, std::size_t l, std::size_t s, double f) {
  std::vector<double> raw(v.coeffs().begin(), v.coeffs().end());
  double delta = f * (raw[l] - raw[s]) / 2.0;
  raw[l] -= delta;
  raw[s] += delta;
  return SchmidtVector::from_raw(std::move(raw), /*normalize=*/false, kNormTol, v.zero_tol());
}

SchmidtVector random_majorized(const SchmidtVector& v, std::size_t steps, std::mt19937_64& rng) {
  SchmidtVector out = v;
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t n = out.size();
    if (n < 2) break;
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(unit_uniform(rng) * n), n - 1);
    std::size_t j =
        std::min<std::size_t>(static_cast<std::size_t>(unit_uniform(rng) * (n - 1)), n - 2);
    if (j >= i) ++j;
    std::size_t l = std::min(i, j);  // sorted descending, so the lower index holds more
    std::size_t s = std::max(i, j);
    out = robin_hood_transfer(out, l, s, unit_uniform(rng));
  }
  return out;
}

SchmidtVector perturbed(const SchmidtVector& v, double delta, std::mt19937_64& rng) {
  std::vector<double> raw(v.coeffs().begin(), v.coeffs().end());
  for (double& x : raw) {
    x += delta * (2.0 * unit_uniform(rng) - 1.0);
    if (x < 0.0) x = 0.0;
  }
  return SchmidtVector::from_raw(std::move(raw), /*normalize=*/true);
}

std::optional<CounterexampleRecord> check_pair(const SchmidtVector& a, const SchmidtVector& b,
                                               FlipMeasure measure, double strict_margin,
                                               std::size_t index) {
  double ea = entropy_of_entanglement(a);
  double eb = entropy_of_entanglement(b);
  double ma, mb;
  if (measure == FlipMeasure::Concurrence) {
    ma = concurrence_squared(a);
    mb = concurrence_squared(b);
  } else {
    ma = negativity(a);
    mb = negativity(b);
  }
  bool flip_ab = (ea - eb > strict_margin) && (mb - ma > strict_margin);
  bool flip_ba = (eb - ea > strict_margin) && (ma - mb > strict_margin);
  if (!flip_ab && !flip_ba) return std::nullopt;

  ComparabilityResult cls = classify(a, b);
  if (cls.tag != Comparability::Incomparable) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ordering flip on a comparable pair (" << to_string(cls.tag) << ") at sample " << index
        << ": E = " << ea << " vs " << eb << ", " << to_string(measure) << " = " << ma << " vs "
        << mb;
    throw PropertyViolation(msg.str());
  }
  return CounterexampleRecord{index, a, b, ea, eb, ma, mb, cls};
}

namespace {

void scan_range(const SearchConfig& cfg, std::size_t begin, std::size_t end,
                std::vector<CounterexampleRecord>& hits) {
  for (std::size_t i = begin; i < end; ++i) {
    std::mt19937_64 rng = substream(cfg.seed, i);
    SchmidtVector a = sample_simplex(cfg.rank, rng);
    SchmidtVector b = cfg.perturb > 0.0 ? perturbed(a, cfg.perturb, rng)
                                        : sample_simplex(cfg.rank, rng);
    if (auto rec = check_pair(a, b, cfg.measure, cfg.strict_margin, i)) {
      hits.push_back(std::move(*rec));
    }
  }
}

}  // namespace

std::vector<CounterexampleRecord> find_nonmonotonic_pairs(const SearchConfig& cfg) {
  unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1 || cfg.samples < 2 * threads) {
    std::vector<CounterexampleRecord> hits;
    scan_range(cfg, 0, cfg.samples, hits);
    return hits;
  }

  std::vector<std::vector<CounterexampleRecord>> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (cfg.samples + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = static_cast<std::size_t>(t) * chunk;
    std::size_t end = std::min(cfg.samples, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        scan_range(cfg, begin, end, partial[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  std::vector<CounterexampleRecord> hits;
  for (auto& part : partial) {
    hits.insert(hits.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  // Chunks are contiguous index ranges, so concatenation is already ordered;
  // the sort keeps that a guarantee rather than an assumption.
  std::sort(hits.begin(), hits.end(),
            [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
              return x.index < y.index;
            });
  return hits;
}

MonotoneReport verify_monotone_on_comparable(std::size_t rank, std::size_t trials,
                                             std::uint64_t seed) {
  constexpr double kOrderSlack = 1e-12;
  constexpr double kGapTol = 1e-10;
  MonotoneReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng = substream(seed, i);
    SchmidtVector v = sample_simplex(rank, rng);
    std::size_t steps = 1 + static_cast<std::size_t>(3.0 * unit_uniform(rng));
    SchmidtVector u = random_majorized(v, steps, rng);

    auto fail = [&](const std::string& what) {
      std::ostringstream msg;
      msg.precision(17);
      msg << what << " at trial " << i << " (u = [";
      for (std::size_t k = 0; k < u.size(); ++k) msg << (k ? ", " : "") << u[k];
      msg << "], v = [";
      for (std::size_t k = 0; k < v.size(); ++k) msg << (k ? ", " : "") << v[k];
      msg << "])";
      throw PropertyViolation(msg.str());
    };

    ComparabilityResult cls = classify(u, v);
    if (cls.tag == Comparability::Equivalent) {
      ++report.equivalent_pairs;
      continue;
    }
    if (cls.tag != Comparability::AConvertsToB) {
      fail("transfer construction broke majorization, classified " + to_string(cls.tag));
    }
    ++report.strict_pairs;

    MeasureSet mu = measures(u);
    MeasureSet mv = measures(v);
    if (mu.entropy < mv.entropy - kOrderSlack) fail("entropy increased under conversion");
    if (mu.concurrence < mv.concurrence - kOrderSlack) {
      fail("concurrence increased under conversion");
    }
    if (mu.negativity < mv.negativity - kOrderSlack) {
      fail("negativity increased under conversion");
    }

    double gap = concurrence_gap(u, v);
    if (gap < -kGapTol) fail("closed-form concurrence gap is negative");
    double residual = std::abs(mu.concurrence_squared - mv.concurrence_squared - gap);
    if (residual > kGapTol) fail("closed-form concurrence gap mismatch");
    report.max_gap_residual = std::max(report.max_gap_residual, residual);
  }
  return report;
}

}  // namespace entanglekit
