#include "odimcf/shortest_path.hpp"

namespace odimcf {

PathResult sp_original(const Network& network, const Commodity& commodity,
                       ShortestPathSolver& solver) {
  return solver.solve(commodity.origin, commodity.destination,
                      [&](ArcId a) { return network.arc(a).cost; });
}

PathResult sp_market(const FlowState& state, const IhhParams& params,
                     CommodityId k, ShortestPathSolver& solver) {
  const Instance& inst = state.instance();
  const Commodity& com = inst.commodities[static_cast<size_t>(k)];
  return solver.solve(com.origin, com.destination, [&](ArcId a) {
    return market_cost(params, inst.network.arc(a), state.residual_capacity(a, k),
                       com.demand);
  });
}

PathResult sp_feasible(const FlowState& state, const IhhParams& params,
                       CommodityId k, ShortestPathSolver& solver) {
  const Instance& inst = state.instance();
  const Commodity& com = inst.commodities[static_cast<size_t>(k)];
  return solver.solve(com.origin, com.destination,
                      [&](ArcId a) { return feasible_arc_cost(params, state, a, k); });
}

}  // namespace odimcf
