#include <benchmark/benchmark.h>

#include "pinch/layer_kernel.hpp"

namespace {

pinch::SemigroupSpec bench_spec(std::int64_t n) {
  return n == 3 ? pinch::single_pinch(3, 3, pinch::ExponentVector{1, 1, 1})
                : pinch::single_pinch(4, 3, pinch::ExponentVector{1, 1, 1, 0});
}

void BM_LayersParallel(benchmark::State& state) {
  auto spec = bench_spec(state.range(0));
  const int t_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_layers_parallel(spec, t_max).member_count(t_max));
}

void BM_LayersSerial(benchmark::State& state) {
  auto spec = bench_spec(state.range(0));
  const int t_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_layers_serial(spec, t_max).member_count(t_max));
}

}  // namespace

BENCHMARK(BM_LayersParallel)->Args({3, 8})->Args({3, 16})->Args({4, 6})->Args({4, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayersSerial)->Args({3, 8})->Args({3, 16})->Args({4, 6})->Args({4, 10})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
