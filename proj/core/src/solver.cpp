#include "odimcf/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace odimcf {

FlowState sp_solve(const Instance& instance) {
  FlowState state(instance);
  ShortestPathSolver solver(instance.network);
  for (CommodityId k = 0; k < instance.num_commodities(); ++k) {
    PathResult sp =
        sp_original(instance.network, instance.commodities[static_cast<size_t>(k)], solver);
    if (!sp.route.empty()) state.set_route(k, std::move(sp.route));
  }
  return state;
}

bool route_decision(FlowState& state, const IhhParams& params, CommodityId k,
                    std::int32_t lambda, ShortestPathSolver& solver,
                    std::uint64_t* hurdle_blocks) {
  // Unrouted means the destination is unreachable; no market path can exist.
  if (state.route(k).empty()) return false;

  Route incumbent = state.take_route(k);
  const double rc_old = route_market_cost(params, state, incumbent, k);
  PathResult alt = sp_market(state, params, k, solver);
  const double threshold = hurdle_multiplier(params, lambda) * rc_old;

  if (!alt.route.empty() && alt.cost < threshold) {
    state.set_route(k, std::move(alt.route));
    return true;
  }
  if (hurdle_blocks && !alt.route.empty() && alt.cost < rc_old) ++(*hurdle_blocks);
  state.set_route(k, std::move(incumbent));
  return false;
}

void main_loop(const Instance& instance, FlowState& state,
               const SolveConfig& config, Rng& rng, SolveCounters& counters) {
  const auto num_k = static_cast<size_t>(instance.num_commodities());
  counters.reroutes_per_commodity.assign(num_k, 0);
  ShortestPathSolver solver(instance.network);
  std::vector<CommodityId> order(num_k);
  std::iota(order.begin(), order.end(), 0);

  bool changed = true;
  while (changed) {
    if (config.max_main_iterations &&
        counters.main_loop_iterations >= *config.max_main_iterations)
      break;
    changed = false;
    ++counters.main_loop_iterations;
    rng.shuffle(order);
    for (CommodityId k : order) {
      auto& lambda = counters.reroutes_per_commodity[static_cast<size_t>(k)];
      if (route_decision(state, config.params, k, lambda, solver,
                         &counters.hurdle_activations)) {
        ++lambda;
        changed = true;
      }
    }
  }
}

void feas_path(const Instance& instance, FlowState& state,
               const IhhParams& params, Rng& rng, SolveCounters& counters) {
  const auto num_k = static_cast<size_t>(instance.num_commodities());
  counters.feaspath_reroutes_per_commodity.assign(num_k, 0);
  ShortestPathSolver solver(instance.network);
  std::vector<CommodityId> order(num_k);
  std::iota(order.begin(), order.end(), 0);

  bool changed = true;
  while (changed) {
    changed = false;
    rng.shuffle(order);
    for (CommodityId k : order) {
      if (state.route(k).empty()) continue;
      auto& lambda = counters.feaspath_reroutes_per_commodity[static_cast<size_t>(k)];

      Route incumbent = state.take_route(k);
      const double frc_old = feasible_route_cost(params, state, incumbent, k);
      PathResult alt = sp_feasible(state, params, k, solver);
      const double threshold =
          std::min(params.big_m, hurdle_multiplier(params, lambda) * frc_old);

      if (!alt.route.empty() && alt.cost < threshold) {
        state.set_route(k, std::move(alt.route));
        ++lambda;
        ++counters.feaspath_reroutes;
        changed = true;
      } else {
        state.set_route(k, std::move(incumbent));
      }
    }
  }
}

SolveReport solve(const Instance& instance, const SolveConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto num_k = static_cast<size_t>(instance.num_commodities());

  if (num_k > 0) {
    validate_params(config.params);
    const double floor =
        instance.network.max_arc_cost() * static_cast<double>(instance.network.num_nodes());
    if (config.params.big_m < floor)
      throw std::invalid_argument(
          "params: big_m must be >= max arc cost * node count");
  }

  SolveReport report(sp_solve(instance));
  report.counters.reroutes_per_commodity.assign(num_k, 0);
  report.counters.feaspath_reroutes_per_commodity.assign(num_k, 0);

  if (capacity_feasible(report.state)) {
    // Cheapest possible routing is already feasible, hence optimal.
    report.total_cost = total_cost(report.state);
    report.feasible = true;
    report.cost_before_feaspath = report.total_cost;
    report.feasible_before_feaspath = true;
  } else {
    Rng rng(config.seed);
    main_loop(instance, report.state, config, rng, report.counters);

    report.cost_before_feaspath = total_cost(report.state);
    report.feasible_before_feaspath = capacity_feasible(report.state);
    report.counters.violated_arcs_before_feaspath = count_violated_arcs(report.state);
    report.violated_arc_fraction_before_feaspath =
        instance.network.num_arcs() == 0
            ? 0.0
            : static_cast<double>(report.counters.violated_arcs_before_feaspath) /
                  static_cast<double>(instance.network.num_arcs());

    feas_path(instance, report.state, config.params, rng, report.counters);
    report.counters.violated_arcs_after_feaspath = count_violated_arcs(report.state);

    report.total_cost = total_cost(report.state);
    report.feasible = capacity_feasible(report.state);
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace odimcf
