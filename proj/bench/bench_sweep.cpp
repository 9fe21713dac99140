// Serial reference kernels against the OpenMP kernels on the same inputs.
//
//   ./bench_sweep --benchmark_filter=Records

#include <benchmark/benchmark.h>

#include "skewq/sweep.hpp"

namespace {

void BM_RecordsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skewq::sweep_patterns_serial(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(skewq::pattern_count(n)));
}

void BM_RecordsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(skewq::sweep_patterns_parallel(n, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(skewq::pattern_count(n)));
  state.counters["threads"] = skewq::effective_jobs(jobs);
}

void BM_OrbitsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skewq::orbit_partition_serial(n));
}

void BM_OrbitsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(skewq::orbit_partition_parallel(n, jobs));
  state.counters["threads"] = skewq::effective_jobs(jobs);
}

}  // namespace

BENCHMARK(BM_RecordsSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecordsParallel)->ArgsProduct({{5, 6, 7}, {1, 0}})->Unit(benchmark::kMillisecond);
// canonical_form per pattern is n! work each; n = 7 takes minutes serially.
BENCHMARK(BM_OrbitsSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitsParallel)->ArgsProduct({{4, 5, 6, 7}, {1, 0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
