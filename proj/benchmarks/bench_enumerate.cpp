#include <benchmark/benchmark.h>

#include <random>

#include "psrecon/psrecon.hpp"

namespace {

void BM_ReconstructAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  std::mt19937_64 rng(99);
  const auto m =
      psrecon::compose_multiset(psrecon::random_multiset(rng, n, h, n / 2));
  std::size_t classes = 0;
  for (auto _ : state) {
    classes = psrecon::reconstruct_all(m).classes.size();
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_ReconstructAll)->ArgsProduct({{8, 12, 16}, {1, 2, 3}});

void BM_BruteForce(benchmark::State& state) {
  std::mt19937_64 rng(99);
  const auto m = psrecon::compose_multiset(
      psrecon::random_multiset(rng, static_cast<int>(state.range(0)), 2,
                               static_cast<int>(state.range(0)) / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psrecon::brute_force_all(m));
  }
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(8)->Arg(10);

}  // namespace
