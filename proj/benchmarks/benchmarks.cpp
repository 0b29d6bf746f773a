#include <benchmark/benchmark.h>

#include "drg/feasibility.hpp"
#include "drg/graph.hpp"
#include "drg/search.hpp"
#include "drg/spectral.hpp"

using namespace drg;

static void BM_SearchD3Small(benchmark::State& state) {
  SearchConfig cfg;
  cfg.a1_max = state.range(0);
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg).arrays.size());
}
BENCHMARK(BM_SearchD3Small)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
  const auto ia = parse_array(state.range(0) == 3 ? "{45,26,3;1,6,39}" : "{5,4,1,1;1,1,4,5}");
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(ia).entries.size());
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(4);

static void BM_Criteria(benchmark::State& state) {
  const auto ia = parse_array("{207,120,1;1,20,207}");
  for (auto _ : state) benchmark::DoNotOptimize(criteria_1_to_12(ia).feasible);
}
BENCHMARK(BM_Criteria);

static void BM_Kernel(benchmark::State& state) {
  const auto ia = parse_array("{60,35,9;1,6,42}");
  for (auto _ : state) benchmark::DoNotOptimize(kernel_may_pass(ia, {}));
}
BENCHMARK(BM_Kernel);

static void BM_CheckDistanceRegular(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? gosset() : halved_cube(7);
  for (auto _ : state) benchmark::DoNotOptimize(check_distance_regular(g).distance_regular);
}
BENCHMARK(BM_CheckDistanceRegular)->Arg(0)->Arg(1);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = hoffman_singleton();
  for (auto _ : state) benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)).order());
}
BENCHMARK(BM_Graph6RoundTrip);

static void BM_Geometric(benchmark::State& state) {
  const auto g = hamming(3, 4);
  const auto ia = *check_distance_regular(g).array;
  for (auto _ : state) benchmark::DoNotOptimize(is_geometric_small(g, ia).verdict);
}
BENCHMARK(BM_Geometric)->Unit(benchmark::kMillisecond);

static void BM_CaseScan(benchmark::State& state) {
  const auto spec = case_scan("12-2");
  for (auto _ : state) benchmark::DoNotOptimize(scan_c2one_case(spec).rows.size());
}
BENCHMARK(BM_CaseScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
