// Serial reference vs OpenMP kernels, plus a report of E_strong(M_n) −
// E_weak(M_n) for the symmetric walk across n.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdio>

#include "rwalk/kernels.hpp"
#include "rwalk/montecarlo.hpp"
#include "rwalk/reflect.hpp"

using namespace rwalk;

namespace {

const StepLaw kSymmetric{0.5, 0.5, 0.0};

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_SurvivalTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(survival_table(n, 2, n + 1, kSymmetric, exec_of(state)));
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_SurvivalTable)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMillisecond);

void BM_ReflectedHits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reflected_hit_probabilities(n, 1, 4 * static_cast<int>(std::sqrt(n)), kSymmetric,
                                                         Reflection::Strong, exec_of(state)));
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_ReflectedHits)->ArgsProduct({{0, 1}, {1000, 4000}})->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  SimConfig c;
  c.n = static_cast<int>(state.range(1));
  c.trials = 20000;
  c.seed = 1;
  c.statistics = {SimStatistic::MaxPlus, SimStatistic::CrossProduct};
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) ? simulate(c) : simulate_serial(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials) * c.n);
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Simulate)->ArgsProduct({{0, 1}, {1000}})->Unit(benchmark::kMillisecond);

void report_strong_minus_weak() {
  std::printf("symmetric walk: E_strong(M_n) - E_weak(M_n)\n");
  std::printf("%8s %14s %14s %12s %12s\n", "n", "E_strong", "E_weak", "difference", "diff/sqrt(n)");
  const auto strong = WalkParams::symmetric(Mode::StrongReflect);
  const auto weak = WalkParams::symmetric(Mode::WeakReflect);
  for (int n : {16, 64, 256, 1024, 4096}) {
    const double es = reflected_max_moments_float(n, strong, Reflection::Strong).mean;
    const double ew = reflected_max_moments_float(n, weak, Reflection::Weak).mean;
    std::printf("%8d %14.8f %14.8f %12.8f %12.8f\n", n, es, ew, es - ew, (es - ew) / std::sqrt(n));
  }
  std::printf("OpenMP workers: %d\n\n", worker_count());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  report_strong_minus_weak();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
