// Microbenchmarks for the hot paths: scaling, matchings, the decomposition
// variants, and the Pauli transform. Inputs are seeded per size so numbers
// are comparable across runs.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <map>

#include "bvnkit/bvn.hpp"
#include "bvnkit/lcu.hpp"
#include "bvnkit/matching.hpp"
#include "bvnkit/random.hpp"
#include "bvnkit/sinkhorn.hpp"

using namespace bvnkit;

namespace {

const Matrix& cached_ds(std::size_t n) {
  static std::map<std::size_t, Matrix> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, random_doubly_stochastic(n, 7000 + n)).first;
  return it->second;
}

void BM_SinkhornScale(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_positive_matrix(n, 7000 + n);
  for (auto _ : state) {
    auto r = sinkhorn_scale(a, 1e-10);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_SinkhornScale)->RangeMultiplier(2)->Range(8, 128);

void BM_PerfectMatching(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SupportGraph g = make_support_graph(cached_ds(n), 1e-12);
  for (auto _ : state) {
    auto m = perfect_matching(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_PerfectMatching)->RangeMultiplier(2)->Range(8, 128);

void BM_MaxWeightMatching(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SupportGraph g = make_support_graph(cached_ds(n), 1e-12);
  for (auto _ : state) {
    auto m = max_weight_perfect_matching(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MaxWeightMatching)->RangeMultiplier(2)->Range(8, 128);

void BM_BottleneckMatching(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SupportGraph g = make_support_graph(cached_ds(n), 1e-12);
  for (auto _ : state) {
    auto m = bottleneck_perfect_matching(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_BottleneckMatching)->RangeMultiplier(2)->Range(8, 128);

void BM_DecomposeOriginal(benchmark::State& state) {
  const Matrix& s = cached_ds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = decompose_original(s, 0.01);
    benchmark::DoNotOptimize(d.terms.size());
  }
}
BENCHMARK(BM_DecomposeOriginal)->RangeMultiplier(2)->Range(8, 32);

void BM_DecomposeLargestWeight(benchmark::State& state) {
  const Matrix& s = cached_ds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = decompose_largest_weight(s, 0.01);
    benchmark::DoNotOptimize(d.terms.size());
  }
}
BENCHMARK(BM_DecomposeLargestWeight)->RangeMultiplier(2)->Range(8, 64);

void BM_DecomposeBottleneck(benchmark::State& state) {
  const Matrix& s = cached_ds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = decompose_bottleneck(s, 0.01);
    benchmark::DoNotOptimize(d.terms.size());
  }
}
BENCHMARK(BM_DecomposeBottleneck)->RangeMultiplier(2)->Range(8, 64);

void BM_PauliCoefficients(benchmark::State& state) {
  const Matrix& s = cached_ds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto c = pauli_coefficients(s);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_PauliCoefficients)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
