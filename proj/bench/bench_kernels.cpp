// Serial reference vs OpenMP grid kernels.

#include <benchmark/benchmark.h>

#include "gupent/grid.hpp"
#include "gupent/maxent.hpp"
#include "gupent/superstats.hpp"

namespace {

using namespace gupent;

void BM_SolveGridSerial(benchmark::State& state) {
  const auto xs = GridSpec{0.0, 20.0, static_cast<int>(state.range(0))}.values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxent::solve_grid_serial(maxent::Branch::minus, xs, 1e-12));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SolveGridParallel(benchmark::State& state) {
  const auto xs = GridSpec{0.0, 20.0, static_cast<int>(state.range(0))}.values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxent::solve_grid(maxent::Branch::minus, xs, 1e-12));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoltzmannTableSerial(benchmark::State& state) {
  const auto ps = GridSpec{0.05, 1.0, static_cast<int>(state.range(0))}.values();
  const auto xs = GridSpec{0.0, 5.0, 20}.values();
  for (auto _ : state) benchmark::DoNotOptimize(superstats::boltzmann_table_serial(ps, xs, 1.0, 1e-9));
}

void BM_BoltzmannTableParallel(benchmark::State& state) {
  const auto ps = GridSpec{0.05, 1.0, static_cast<int>(state.range(0))}.values();
  const auto xs = GridSpec{0.0, 5.0, 20}.values();
  for (auto _ : state) benchmark::DoNotOptimize(superstats::boltzmann_table(ps, xs, 1.0, 1e-9));
}

}  // namespace

BENCHMARK(BM_SolveGridSerial)->Arg(301)->Arg(4096);
BENCHMARK(BM_SolveGridParallel)->Arg(301)->Arg(4096);
BENCHMARK(BM_BoltzmannTableSerial)->Arg(20)->Arg(80);
BENCHMARK(BM_BoltzmannTableParallel)->Arg(20)->Arg(80);

BENCHMARK_MAIN();
