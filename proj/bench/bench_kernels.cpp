// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// thread counts; both variants compute identical results.

#include <benchmark/benchmark.h>

#include "ecg/aux_graph.hpp"
#include "ecg/blossom.hpp"
#include "ecg/kernels.hpp"
#include "ecg/normalize.hpp"
#include "ecg/oracle.hpp"

namespace {

using namespace ecg;

ColoredMultigraph dense_instance(std::size_t n) {
  return oracle::gen_random_instance(n, 5, 5 * n, 9, 1);
}

std::vector<kernels::ReachSource> all_sources(const ColoredMultigraph& g) {
  std::vector<kernels::ReachSource> sources;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (Color c = 1; c <= g.num_colors(); ++c) sources.push_back({u, c});
  }
  return sources;
}

template <kernels::Execution exec>
void BM_ReachTrees(benchmark::State& state) {
  const auto g = dense_instance(static_cast<std::size_t>(state.range(0)));
  const auto sources = all_sources(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::reach_trees(g, sources, exec));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sources.size()));
}
BENCHMARK(BM_ReachTrees<kernels::Execution::serial>)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReachTrees<kernels::Execution::parallel>)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_MultiplicitySearchSerial(benchmark::State& state) {
  const auto g = oracle::gen_random_instance(5, 3, static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplicity_search_serial(g, 3));
}
void BM_MultiplicitySearchOmp(benchmark::State& state) {
  const auto g = oracle::gen_random_instance(5, 3, static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplicity_search_omp(g, 3));
}
BENCHMARK(BM_MultiplicitySearchSerial)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicitySearchOmp)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

// Not parallelized; listed for scale next to the kernels above.
void BM_Matching(benchmark::State& state) {
  const auto g = dense_instance(static_cast<std::size_t>(state.range(0)));
  const auto inst = build_aux_graph(normalize(g).graph).matching_instance();
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_perfect_matching(inst));
  state.counters["H_vertices"] = static_cast<double>(inst.num_vertices);
}
BENCHMARK(BM_Matching)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
