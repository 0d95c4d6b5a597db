#include <benchmark/benchmark.h>

#include "cascadelab/generators.hpp"
#include "cascadelab/metrics.hpp"
#include "cascadelab/rng.hpp"

namespace cl = cascadelab;

namespace {

const cl::LabeledGraph& security_graph() {
  static const auto g = cl::gen_security(100000, 10, 1.5, 11);
  return g;
}

}  // namespace

static void BM_Navigate(benchmark::State& state) {
  const auto& g = security_graph();
  cl::Rng rng(3);
  for (auto _ : state) {
    const auto u = static_cast<cl::NodeId>(rng.below(g.node_count()));
    const auto v = static_cast<cl::NodeId>(rng.below(g.node_count()));
    benchmark::DoNotOptimize(cl::navigate(g, u, v, 48));
  }
}
BENCHMARK(BM_Navigate)->Unit(benchmark::kMicrosecond);

// Baseline for BM_Navigate.
static void BM_HopDistance(benchmark::State& state) {
  const auto& g = security_graph();
  cl::Rng rng(3);
  for (auto _ : state) {
    const auto u = static_cast<cl::NodeId>(rng.below(g.node_count()));
    const auto v = static_cast<cl::NodeId>(rng.below(g.node_count()));
    benchmark::DoNotOptimize(cl::hop_distance(g, u, v));
  }
}
BENCHMARK(BM_HopDistance)->Unit(benchmark::kMicrosecond);

static void BM_PriorityTree(benchmark::State& state) {
  const auto& g = security_graph();
  for (auto _ : state) benchmark::DoNotOptimize(cl::infection_priority_tree(g));
}
BENCHMARK(BM_PriorityTree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
