#include <benchmark/benchmark.h>

#include <random>

#include "psrecon/psrecon.hpp"

namespace {

psrecon::CompositionMultiset instance(int n, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return psrecon::compose_multiset(psrecon::random_multiset(rng, n, h, n / 2));
}

void BM_ReconstructOne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  const auto m = instance(n, h, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psrecon::reconstruct_one(m));
  }
  state.SetComplexityN(static_cast<int64_t>(n) * h);
}
BENCHMARK(BM_ReconstructOne)
    ->ArgsProduct({{32, 64, 128, 256, 512}, {4, 8, 16}})
    ->Complexity(benchmark::oN);

void BM_ComposeMultiset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  std::mt19937_64 rng(5);
  const auto u = psrecon::random_multiset(rng, n, h, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psrecon::compose_multiset(u));
  }
}
BENCHMARK(BM_ComposeMultiset)->ArgsProduct({{64, 256}, {4, 16}});

void BM_CheckUnique(benchmark::State& state) {
  const auto m = instance(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)), 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psrecon::check_unique(m));
  }
}
BENCHMARK(BM_CheckUnique)->ArgsProduct({{64, 256}, {4, 16}});

}  // namespace
