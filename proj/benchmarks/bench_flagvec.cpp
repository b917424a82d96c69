#include <benchmark/benchmark.h>

#include "graphflag/graphflag.hpp"

using namespace graphflag;

static void BM_CanonicalKey(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(4, 8);

static void BM_EnumerateGraphs(benchmark::State& state) {
  // the class list is cached after the first call; this measures lookup plus copy
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(3, 7);

static void BM_VerboseRecursion(benchmark::State& state) {
  const Graph g = complement(Graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verbose_flag_vector(g, VerboseMethod::recursion));
}
BENCHMARK(BM_VerboseRecursion)->DenseRange(3, 8);

static void BM_VerboseShellingSum(benchmark::State& state) {
  const Graph g = complement(Graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verbose_flag_vector(g, VerboseMethod::shelling_sum));
}
BENCHMARK(BM_VerboseShellingSum)->DenseRange(3, 7);

static void BM_ConciseComplete(benchmark::State& state) {
  const Graph g = complement(Graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(concise_flag_vector(g));
}
BENCHMARK(BM_ConciseComplete)->DenseRange(3, 6);

static void BM_ConciseFromVerbose(benchmark::State& state) {
  const VerboseVector v = verbose_flag_vector(complement(Graph(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(concise_from_verbose(v));
}
BENCHMARK(BM_ConciseFromVerbose)->DenseRange(3, 8);

static void BM_TotalFlagVector(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(total_flag_vector(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TotalFlagVector)->RangeMultiplier(2)->Range(4, 16);
