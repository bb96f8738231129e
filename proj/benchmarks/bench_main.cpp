#include <benchmark/benchmark.h>

#include "dominium/families.hpp"
#include "dominium/graph6.hpp"
#include "dominium/solvers.hpp"

using namespace dominium;

static void BM_TupleDominationHFamily(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const Graph h = h_family(k, r);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_xk(h, k).value);
}
BENCHMARK(BM_TupleDominationHFamily)->Args({4, 2})->Args({3, 5})->Args({5, 3})->Args({3, 10});

static void BM_TupleDominationGnp(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_xk(g, 2).value);
}
BENCHMARK(BM_TupleDominationGnp)->DenseRange(12, 20, 4);

static void BM_KDominationGnp(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_k(g, 2).value);
}
BENCHMARK(BM_KDominationGnp)->DenseRange(12, 20, 4);

static void BM_PackingGnp(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(rho(g).value);
}
BENCHMARK(BM_PackingGnp)->DenseRange(16, 64, 16);

static void BM_OracleOrderTen(benchmark::State& state) {
  const Graph g = gnp(10, 0.5, 14);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(g, Parameter::gamma_xk, 2).value);
}
BENCHMARK(BM_OracleOrderTen);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.5, 15);
  for (auto _ : state) benchmark::DoNotOptimize(from_graph6(to_graph6(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
