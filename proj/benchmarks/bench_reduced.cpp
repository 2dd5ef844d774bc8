#include <benchmark/benchmark.h>

#include "turanforge/constructions.hpp"
#include "turanforge/reduced.hpp"

using namespace turanforge;

namespace {

std::vector<int> first_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

} // namespace

static void BM_MinEeDensity(benchmark::State& state) {
  const ReducedHypergraph a = mod3_reduced(first_indices(6), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_ee_density(a));
}
BENCHMARK(BM_MinEeDensity)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

// Absent, so every 5-subset is exhausted.
static void BM_SupportsK5Mod3(benchmark::State& state) {
  const ReducedHypergraph a = mod3_reduced(first_indices(static_cast<int>(state.range(0))), 6);
  for (auto _ : state) benchmark::DoNotOptimize(supports_clique(a, 5));
}
BENCHMARK(BM_SupportsK5Mod3)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_InhabitedTriple(benchmark::State& state) {
  const auto idx = first_indices(static_cast<int>(state.range(0)));
  const ReducedHypergraph a = random_preimage(mod3_reduced(idx, 3), 6, 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_inhabited_triple(a, idx));
}
BENCHMARK(BM_InhabitedTriple)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
