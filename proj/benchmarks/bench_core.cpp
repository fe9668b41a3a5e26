#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>

#include "entanglekit/comparability.hpp"
#include "entanglekit/density.hpp"
#include "entanglekit/equi_entangled.hpp"
#include "entanglekit/rng.hpp"
#include "entanglekit/sampling.hpp"
#include "entanglekit/schmidt.hpp"

namespace {

using namespace entanglekit;

void bm_measures(benchmark::State& state) {
  std::mt19937_64 rng = substream(1, 0);
  SchmidtVector v = sample_simplex(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measures(v));
  }
}
BENCHMARK(bm_measures)->Arg(3)->Arg(8)->Arg(32);

void bm_classify(benchmark::State& state) {
  std::mt19937_64 rng = substream(2, 0);
  std::size_t rank = static_cast<std::size_t>(state.range(0));
  SchmidtVector a = sample_simplex(rank, rng);
  SchmidtVector b = sample_simplex(rank, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(a, b));
  }
}
BENCHMARK(bm_classify)->Arg(3)->Arg(16);

void bm_concurrence_gap(benchmark::State& state) {
  std::mt19937_64 rng = substream(3, 0);
  SchmidtVector v = sample_simplex(8, rng);
  SchmidtVector u = random_majorized(v, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_gap(u, v));
  }
}
BENCHMARK(bm_concurrence_gap);

void bm_sample_simplex(benchmark::State& state) {
  std::mt19937_64 rng = substream(4, 0);
  std::size_t rank = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_simplex(rank, rng));
  }
}
BENCHMARK(bm_sample_simplex)->Arg(3)->Arg(8);

void bm_search_pair(benchmark::State& state) {
  std::mt19937_64 rng = substream(5, 0);
  for (auto _ : state) {
    SchmidtVector a = sample_simplex(3, rng);
    SchmidtVector b = sample_simplex(3, rng);
    benchmark::DoNotOptimize(check_pair(a, b, FlipMeasure::Concurrence, 1e-9));
  }
}
BENCHMARK(bm_search_pair);

void bm_negativity_via_pt(benchmark::State& state) {
  std::mt19937_64 rng = substream(6, 0);
  std::size_t dim = static_cast<std::size_t>(state.range(0));
  SchmidtVector v = sample_simplex(dim, rng);
  PureStateVector s = embed_state(v, dim, dim, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity_via_pt(s));
  }
}
BENCHMARK(bm_negativity_via_pt)->Arg(2)->Arg(3)->Arg(4);

void bm_solve_alpha2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_alpha2(0.42, 1.547));
  }
}
BENCHMARK(bm_solve_alpha2);

void bm_trace_curve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_curve({1.547, static_cast<std::size_t>(state.range(0))}));
  }
}
BENCHMARK(bm_trace_curve)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
