#include <benchmark/benchmark.h>

#include "turanforge/constructions.hpp"
#include "turanforge/embed.hpp"

using namespace turanforge;

static void BM_EmbedNonmono(benchmark::State& state) {
  const ReducedHypergraph a = nonmono_complete({0, 1, 2, 3, 4});
  const Bicolouring phi = nonmono_colouring(a);
  for (auto _ : state) benchmark::DoNotOptimize(embed_k5_bicoloured(a, phi));
}
BENCHMARK(BM_EmbedNonmono);

static void BM_EmbedPreimage(benchmark::State& state) {
  const ReducedHypergraph base = nonmono_complete({0, 1, 2, 3, 4});
  const Preimage p = random_preimage(base, static_cast<int>(state.range(0)), 5);
  Bicolouring phi(p.graph);
  for (const auto& [cls, h] : p.h)
    for (std::size_t v = 0; v < h.size(); ++v)
      if (h[v] == 1) phi.set(cls.lo, cls.hi, static_cast<int>(v), Colour::Blue);
  EmbedOptions o;
  o.check_hypothesis = false;
  for (auto _ : state) benchmark::DoNotOptimize(embed_k5_bicoloured(p.graph, phi, o));
}
BENCHMARK(BM_EmbedPreimage)->Arg(12)->Arg(48)->Unit(benchmark::kMicrosecond);

static void BM_BruteForceMod3(benchmark::State& state) {
  const ReducedHypergraph a = mod3_reduced({0, 1, 2, 3, 4, 5}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_k5_support(a));
}
BENCHMARK(BM_BruteForceMod3)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
