#include <benchmark/benchmark.h>
#include <omp.h>

#include "spl/kernels.hpp"
#include "spl/random.hpp"

namespace {

using namespace spl;

Partition subset_case() {
  SplitMix64 rng(1);
  const WeightedGraph g = random_graph(rng, 12, 0.45);
  return random_partition(rng, g, 4);
}

std::vector<Partition> sweep_case(int nu) {
  SplitMix64 rng(2);
  return enumerate_partitions(random_graph(rng, 7, 0.5), nu);
}

void BM_SubsetLambdaSerial(benchmark::State& state) {
  const Partition p = subset_case();
  for (auto _ : state) benchmark::DoNotOptimize(subset_lambda_values_serial(p));
  state.counters["subsets"] = static_cast<double>(std::size_t{1} << p.boundary().size());
}

void BM_SubsetLambdaParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const Partition p = subset_case();
  for (auto _ : state) benchmark::DoNotOptimize(subset_lambda_values(p));
}

void BM_EnergyEstimatesSerial(benchmark::State& state) {
  const auto parts = sweep_case(2);
  for (auto _ : state) benchmark::DoNotOptimize(partition_energy_estimates_serial(parts));
}

void BM_EnergyEstimatesParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto parts = sweep_case(2);
  for (auto _ : state) benchmark::DoNotOptimize(partition_energy_estimates(parts));
}

void BM_CriticalSweepSerial(benchmark::State& state) {
  const auto parts = sweep_case(3);
  for (auto _ : state) benchmark::DoNotOptimize(critical_sweep_serial(parts));
}

void BM_CriticalSweepParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto parts = sweep_case(3);
  for (auto _ : state) benchmark::DoNotOptimize(critical_sweep(parts));
}

}  // namespace

BENCHMARK(BM_SubsetLambdaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetLambdaParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyEstimatesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyEstimatesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriticalSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriticalSweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
