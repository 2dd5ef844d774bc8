#include <benchmark/benchmark.h>

#include "turanforge/constructions.hpp"
#include "turanforge/hypergraph.hpp"

using namespace turanforge;

static void BM_PsiConstruction(benchmark::State& state) {
  const PairMap psi = random_pairmap(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi_hypergraph(psi));
}
BENCHMARK(BM_PsiConstruction)->Arg(50)->Arg(100)->Arg(200);

// K5-free, so the search runs to exhaustion.
static void BM_CliqueSearchPsi(benchmark::State& state) {
  const Hypergraph3 h = psi_hypergraph(random_pairmap(static_cast<int>(state.range(0)), 3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(contains_clique(h, 5));
}
BENCHMARK(BM_CliqueSearchPsi)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_AllPsiMapsN5(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t hits = 0;
    for (std::size_t code = 0; code < 59049; ++code) {
      PairMap m(5, 3);
      std::size_t c = code;
      for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) {
          m.set(x, y, static_cast<int>(c % 3));
          c /= 3;
        }
      hits += contains_clique(psi_hypergraph(m), 5).found();
    }
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_AllPsiMapsN5)->Unit(benchmark::kMillisecond);
