#include <benchmark/benchmark.h>

#include "cascadelab/cascade.hpp"
#include "cascadelab/config.hpp"
#include "cascadelab/generators.hpp"
#include "cascadelab/harness.hpp"

namespace cl = cascadelab;

// One random-threshold trial on a reused runner, as the figure sweeps do it.
static void BM_CascadeTrial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = state.range(1) ? cl::gen_security(n, 10, 1.5, 7) : cl::gen_pa(n, 10, 7);
  const auto attack = cl::top_degree_nodes(g, cl::log_attack_size(n));
  cl::CascadeRunner runner(g);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    runner.set_thresholds(cl::random_thresholds(g, ++trial));
    benchmark::DoNotOptimize(runner.run_count(attack));
  }
}
BENCHMARK(BM_CascadeTrial)
    ->ArgsProduct({{10000, 100000}, {0, 1}})
    ->ArgNames({"n", "security"})
    ->Unit(benchmark::kMicrosecond);

static void BM_SecurityThreshold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = cl::gen_security(n, 5, 1.5, 7);
  const auto attack = cl::top_degree_nodes(g, cl::log_attack_size(n));
  const auto grid = cl::default_phi_grid();
  for (auto _ : state) benchmark::DoNotOptimize(cl::security_threshold(g, attack, grid, 0.1));
}
BENCHMARK(BM_SecurityThreshold)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
