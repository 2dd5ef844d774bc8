#include <benchmark/benchmark.h>

#include "turanforge/constructions.hpp"
#include "turanforge/quasirandom.hpp"

using namespace turanforge;

static void BM_LinkExhaustive(benchmark::State& state) {
  const Hypergraph3 h = psi_hypergraph(random_pairmap(static_cast<int>(state.range(0)), 3, 3));
  const Graph link = link_graph(h, 0);
  QuasirandomOptions o;
  o.method = Method::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(certify_quasirandom(link, Rational(1, 3), Rational(1, 10), o));
}
BENCHMARK(BM_LinkExhaustive)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_LinkSampling(benchmark::State& state) {
  const Hypergraph3 h = psi_hypergraph(random_pairmap(200, 3, 3));
  const Graph link = link_graph(h, 0);
  QuasirandomOptions o;
  o.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_quasirandom(link, Rational(1, 3), Rational(1, 20), o));
}
BENCHMARK(BM_LinkSampling)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_LinkSpectral(benchmark::State& state) {
  const Hypergraph3 h = psi_hypergraph(random_pairmap(200, 3, 3));
  const Graph link = link_graph(h, 0);
  QuasirandomOptions o;
  o.method = Method::Spectral;
  for (auto _ : state) benchmark::DoNotOptimize(certify_quasirandom(link, Rational(1, 3), Rational(1, 20), o));
}
BENCHMARK(BM_LinkSpectral)->Unit(benchmark::kMillisecond);

static void BM_EeAdversary(benchmark::State& state) {
  const Hypergraph3 h = psi_hypergraph(random_pairmap(100, 3, 1));
  EeOptions o;
  o.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ee_density_adversary(h, Rational(1, 3), Rational(1, 50), o));
}
BENCHMARK(BM_EeAdversary)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
