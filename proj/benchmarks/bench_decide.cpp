#include <benchmark/benchmark.h>

#include "mtavg/average.hpp"
#include "mtavg/generate.hpp"
#include "mtavg/interleave.hpp"

namespace {

void BM_DecideCaterpillar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t1 = mtavg::caterpillar(n, 0);
  const auto t2 = mtavg::caterpillar(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mtavg::decide(t1, t2, mtavg::Height(1)).yes);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecideCaterpillar)->RangeMultiplier(2)->Range(10, 160)->Complexity();

void BM_DistanceRandom(benchmark::State& state) {
  const auto leaves = static_cast<std::size_t>(state.range(0));
  const auto t1 = mtavg::random_merge_tree(leaves, 1, 0, 20);
  const auto t2 = mtavg::random_merge_tree(leaves, 2, 0, 20);
  for (auto _ : state) benchmark::DoNotOptimize(mtavg::distance(t1, t2).epsilon);
}
BENCHMARK(BM_DistanceRandom)->DenseRange(2, 8, 2);

void BM_AverageRandom(benchmark::State& state) {
  const auto leaves = static_cast<std::size_t>(state.range(0));
  const auto t1 = mtavg::random_merge_tree(leaves, 3, 0, 20);
  const auto t2 = mtavg::random_merge_tree(leaves, 4, 0, 20);
  for (auto _ : state) benchmark::DoNotOptimize(mtavg::average_tree(t1, t2).t3.size());
}
BENCHMARK(BM_AverageRandom)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
