// Serial reference sweep vs. the OpenMP sweep on a dense grid.

#include <benchmark/benchmark.h>

#include "fracfreq/response.hpp"
#include "fracfreq/tf_model.hpp"

namespace {

const fracfreq::FracTF& bench_tf() {
  static const fracfreq::FracTF tf =
      fracfreq::parse_tf("(3*s^0.5+2*s^1.7+0.1)/(s^2.3+4*s^1.2+7*s^0.7+1)");
  return tf;
}

fracfreq::FrequencyGrid bench_grid(const benchmark::State& state) {
  return {1e-3, 1e3, static_cast<int>(state.range(0))};
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = bench_grid(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracfreq::sweep_serial(bench_tf(), grid));
  }
  state.SetItemsProcessed(state.iterations() * (grid.intervals() + 1));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = bench_grid(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracfreq::sweep(bench_tf(), grid));
  }
  state.SetItemsProcessed(state.iterations() * (grid.intervals() + 1));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(1000)->Arg(100000);
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
