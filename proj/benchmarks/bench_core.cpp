#include <benchmark/benchmark.h>

#include "hgraph/clique.hpp"
#include "hgraph/decomposition.hpp"
#include "hgraph/domset.hpp"
#include "hgraph/generators.hpp"
#include "hgraph/separators.hpp"
#include "hgraph/tree.hpp"

using namespace hgraph;

static void BM_CutMetrics(benchmark::State& state) {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("theta3"),
                                           static_cast<int>(state.range(0)), 1);
  Decomposition dec = caterpillar_decomposition(rep);
  for (auto _ : state) {
    DecompositionReport report = decomposition_report(rep, dec, {1, 2});
    benchmark::DoNotOptimize(report.global_mim);
  }
}
BENCHMARK(BM_CutMetrics)->Arg(8)->Arg(12)->Arg(14);

static void BM_SeparatorEnumeration(benchmark::State& state) {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("theta3"),
                                           static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto seps = hgraph_minimal_separators(rep);
    benchmark::DoNotOptimize(seps.separators.size());
  }
}
BENCHMARK(BM_SeparatorEnumeration)->Arg(8)->Arg(10)->Arg(12);

static void BM_SeparatorOracle(benchmark::State& state) {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("theta3"),
                                           static_cast<int>(state.range(0)), 2);
  SimpleGraph g = build_intersection_graph(rep);
  for (auto _ : state) {
    auto seps = minimal_separators_oracle(g);
    benchmark::DoNotOptimize(seps.separators.size());
  }
}
BENCHMARK(BM_SeparatorOracle)->Arg(8)->Arg(12);

static void BM_DomsetPipeline(benchmark::State& state) {
  TRepresentation t = gen::random_connected_tgraph(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) {
    TgraphDomsetResult res = domination_number_tgraph(t);
    benchmark::DoNotOptimize(res.minimum);
  }
}
BENCHMARK(BM_DomsetPipeline)->Arg(8)->Arg(10)->Arg(12);

static void BM_CliqueKernel(benchmark::State& state) {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("k13"),
                                           static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    KernelOutput out = clique_kernel(rep, 3);
    benchmark::DoNotOptimize(out.yes);
  }
}
BENCHMARK(BM_CliqueKernel)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
