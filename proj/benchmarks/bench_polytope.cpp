#include <benchmark/benchmark.h>

#include "graphflag/graphflag.hpp"

using namespace graphflag;

static void BM_SpanDimension(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(span_dimension(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SpanDimension)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_DeltaVertices(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_vertices(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaVertices)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DeltaHull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_hull(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaHull)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_NullspaceReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_report(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NullspaceReport)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
