#include <benchmark/benchmark.h>

#include "leapcycles/constructor.hpp"
#include "leapcycles/graycode.hpp"
#include "leapcycles/oracle.hpp"
#include "leapcycles/verifier.hpp"

namespace leapcycles {

static void GrayTour(benchmark::State& state) {
  const Dimension k(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gray_tour(k));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(k.vertex_count()) * state.iterations());
}

// h = 3 exercises one base cycle plus k - 4 lifts, each verified.
static void ConstructStep3(benchmark::State& state) {
  const Dimension k(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(k, StepClass(3)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(k.vertex_count()) * state.iterations());
}

static void ConstructTopStep(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(Dimension(k), StepClass(k - 1)));
  }
}

static void VerifyCycle(benchmark::State& state) {
  const Dimension k(static_cast<unsigned>(state.range(0)));
  const auto cycle = std::get<CycleCertificate>(construct(k, StepClass(3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_cycle(cycle.path, StepClass(3)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(k.vertex_count()) * state.iterations());
}

static void OracleExists(benchmark::State& state) {
  const Dimension k(static_cast<unsigned>(state.range(0)));
  const StepClass h(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_exists(k, h, false));
  }
}

static void OracleCountCube4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_count(Dimension(4), StepClass(1)));
  }
}

BENCHMARK(GrayTour)->DenseRange(12, 20, 4);
BENCHMARK(ConstructStep3)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(ConstructTopStep)->DenseRange(6, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(VerifyCycle)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(OracleExists)->Args({6, 5})->Args({6, 4})->Args({8, 7})->Unit(benchmark::kMicrosecond);
BENCHMARK(OracleCountCube4)->Unit(benchmark::kMillisecond);

}  // namespace leapcycles

BENCHMARK_MAIN();
