#include <benchmark/benchmark.h>

#include "uobs/classes.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/families.hpp"
#include "uobs/obstructions.hpp"
#include "uobs/poset.hpp"
#include "uobs/relations.hpp"

using namespace uobs;

namespace {

// Serial variants run with parallel = false; range(0) selects the variant.
bool parallel_arg(const benchmark::State& state) { return state.range(0) != 0; }

void label(benchmark::State& state) { state.SetLabel(parallel_arg(state) ? "openmp" : "serial"); }

void BM_EnumerateGraphs(benchmark::State& state) {
  EnumerationOptions opts;
  opts.parallel = parallel_arg(state);
  for (auto _ : state) {
    auto graphs = parallel_arg(state) ? enumerate_graphs(7, 1, {}, opts) : enumerate_graphs_serial(7, 1, {}, opts);
    benchmark::DoNotOptimize(graphs.data());
  }
  label(state);
}
BENCHMARK(BM_EnumerateGraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateMultigraphs(benchmark::State& state) {
  EnumerationOptions opts;
  opts.parallel = parallel_arg(state);
  for (auto _ : state) {
    auto graphs = parallel_arg(state) ? enumerate_graphs(5, 2, {}, opts) : enumerate_graphs_serial(5, 2, {}, opts);
    benchmark::DoNotOptimize(graphs.data());
  }
  label(state);
}
BENCHMARK(BM_EnumerateMultigraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ObstructionScan(benchmark::State& state) {
  ObstructionOptions opts;
  opts.n_max = 7;
  opts.parallel = parallel_arg(state);
  const auto& cls = find_builtin_class("apex_forest");
  for (auto _ : state) {
    auto report = parallel_arg(state) ? compute_obstructions(cls, opts) : compute_obstructions_serial(cls, opts);
    benchmark::DoNotOptimize(report.obstructions.size());
  }
  label(state);
}
BENCHMARK(BM_ObstructionScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinElements(benchmark::State& state) {
  GraphSet pool(enumerate_graphs(6, 1, [](const MultiGraph& g) { return !is_outerplanar(g); }));
  ContainmentOptions opts;
  opts.parallel = parallel_arg(state);
  for (auto _ : state) {
    auto mins = parallel_arg(state) ? min_elements(Relation::Minor, pool, opts)
                                    : min_elements_serial(Relation::Minor, pool, opts);
    benchmark::DoNotOptimize(mins.size());
  }
  label(state);
}
BENCHMARK(BM_MinElements)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AntichainSearch(benchmark::State& state) {
  auto poset = rado_truncation(8);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_antichain_by_search(poset, parallel_arg(state)).size());
  label(state);
}
BENCHMARK(BM_AntichainSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
