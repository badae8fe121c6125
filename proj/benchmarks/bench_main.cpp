// Microbenchmarks for the hot paths: the full pipeline at the standard scale,
// the single-pair path search it leans on, and instance generation. Not part
// of the test gate; run by hand when touching solver or search internals.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "odimcf/generator.hpp"
#include "odimcf/model.hpp"
#include "odimcf/pricing.hpp"
#include "odimcf/shortest_path.hpp"
#include "odimcf/solver.hpp"

using namespace odimcf;

namespace {

GenSpec standard_spec(CommodityId commodities) {
  GenSpec spec;
  spec.num_nodes = 30;
  spec.num_arcs = 90;
  spec.num_commodities = commodities;
  spec.seed = 7;
  return spec;
}

void BM_Solve(benchmark::State& state) {
  const GenResult gen = generate(standard_spec(static_cast<CommodityId>(state.range(0))));
  SolveConfig config;
  config.params = default_params(gen.instance);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(solve(gen.instance, config).total_cost);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Solve)->Arg(56)->Arg(112)->Arg(224)->Arg(448);

void BM_PathSearch(benchmark::State& state) {
  const GenResult gen = generate(standard_spec(112));
  const Network& net = gen.instance.network;
  ShortestPathSolver solver(net);
  std::uint64_t k = 0;
  for (auto _ : state) {
    const Commodity& c =
        gen.instance.commodities[static_cast<size_t>(k++ % 112)];
    benchmark::DoNotOptimize(sp_original(net, c, solver).cost);
  }
}
BENCHMARK(BM_PathSearch);

void BM_MarketPathSearch(benchmark::State& state) {
  const GenResult gen = generate(standard_spec(112));
  const IhhParams params = default_params(gen.instance);
  FlowState flow = sp_solve(gen.instance);
  ShortestPathSolver solver(gen.instance.network);
  CommodityId k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp_market(flow, params, k, solver).cost);
    k = static_cast<CommodityId>((k + 1) % 112);
  }
}
BENCHMARK(BM_MarketPathSearch);

void BM_Generate(benchmark::State& state) {
  GenSpec spec = standard_spec(112);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = seed++;
    benchmark::DoNotOptimize(generate(spec).instance.network.num_arcs());
  }
}
BENCHMARK(BM_Generate);

}  // namespace

BENCHMARK_MAIN();
