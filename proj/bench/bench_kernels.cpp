// Serial reference vs OpenMP kernel for the oracle count and the Lyapunov
// estimate.
#include <benchmark/benchmark.h>

#include "slicekit/counting.hpp"
#include "slicekit/oracle.hpp"

using namespace slicekit;

namespace {

const ProblemInstance& base7_instance() {
  static const ProblemInstance inst(7, {{0, 3, 4, 6}, {0, 3, 4, 6}}, {-2, 1});
  return inst;
}

const Lattice& cantor_difference() {
  static const Lattice lat(ProblemInstance(3, {{0, 2}, {0, 2}}, {-1, 1}));
  return lat;
}

void BM_OracleSerial(benchmark::State& state) {
  const Rational x(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_cube_count_serial(base7_instance(), x, static_cast<std::size_t>(state.range(0))));
}

void BM_OracleParallel(benchmark::State& state) {
  const Rational x(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_cube_count(base7_instance(), x, static_cast<std::size_t>(state.range(0))));
}

void BM_LyapunovSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lyapunov_estimate_serial(cantor_difference(), static_cast<std::size_t>(state.range(0)), 1000, 1));
}

void BM_LyapunovParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lyapunov_estimate(cantor_difference(), static_cast<std::size_t>(state.range(0)), 1000, 1));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LyapunovSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LyapunovParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
