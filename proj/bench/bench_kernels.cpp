// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>

#include "linarb/generators.hpp"
#include "linarb/graph.hpp"
#include "linarb/sweep.hpp"

using namespace linarb;

namespace {

const Graph& host(int n) {
  static std::map<int, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, random_regular_with_girth(n, 2, 3, 7).graph).first;
  return it->second;
}

void BM_GirthSerial(benchmark::State& state) {
  const Graph& g = host(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth_serial(g));
}

void BM_GirthParallel(benchmark::State& state) {
  const Graph& g = host(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepSpec spec = sweep_preset("default");
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec));
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepSpec spec = sweep_preset("default");
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}

}  // namespace

BENCHMARK(BM_GirthSerial)->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GirthParallel)->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
