#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "odimcf/model.hpp"
#include "odimcf/pricing.hpp"
#include "odimcf/rng.hpp"
#include "odimcf/shortest_path.hpp"

namespace odimcf {

struct SolveConfig {
  IhhParams params;
  std::uint64_t seed = 0;
  // Safety cap on main-loop passes; unset means run to quiescence.
  std::optional<std::uint64_t> max_main_iterations;
};

struct SolveCounters {
  std::uint64_t main_loop_iterations = 0;
  // Times each commodity switched routes in the main loop (its lambda at exit).
  std::vector<std::int32_t> reroutes_per_commodity;
  // Route calls where the new path beat the incumbent but not the hurdle.
  std::uint64_t hurdle_activations = 0;
  std::uint64_t feaspath_reroutes = 0;
  std::vector<std::int32_t> feaspath_reroutes_per_commodity;
  ArcId violated_arcs_before_feaspath = 0;
  ArcId violated_arcs_after_feaspath = 0;
};

struct SolveReport {
  explicit SolveReport(FlowState s) : state(std::move(s)) {}

  FlowState state;
  double total_cost = 0.0;
  bool feasible = false;
  double cost_before_feaspath = 0.0;
  bool feasible_before_feaspath = false;
  double violated_arc_fraction_before_feaspath = 0.0;
  SolveCounters counters;
  double wall_seconds = 0.0;
};

// Routes every commodity on its cheapest path under the plain arc costs,
// ignoring capacities. Unreachable commodities stay unrouted.
FlowState sp_solve(const Instance& instance);

// One market step for commodity k at reroute count lambda: price the network
// with k's own flow lifted out, find the cheapest market path, and switch iff
// it strictly beats hurdle * (incumbent market cost). Equal cost never
// switches, an unrouted commodity never routes here (its incumbent prices at
// 0), and a blocked-but-improving path bumps *hurdle_blocks when given.
bool route_decision(FlowState& state, const IhhParams& params, CommodityId k,
                    std::int32_t lambda, ShortestPathSolver& solver,
                    std::uint64_t* hurdle_blocks = nullptr);

// Repeats randomized passes of route_decision over all commodities until a
// full pass changes nothing (or the config cap is hit). The pass count and
// per-commodity reroute counts land in `counters`.
void main_loop(const Instance& instance, FlowState& state,
               const SolveConfig& config, Rng& rng, SolveCounters& counters);

// Feasibility repair: same pass structure, but a commodity switches iff the
// alternative's feasible-route cost beats min(big_m, hurdle * incumbent's).
// Reroute counts restart from zero. Never un-routes a commodity, and a switch
// never lands on an arc that cannot take it, so the violated-arc count cannot
// grow.
void feas_path(const Instance& instance, FlowState& state,
               const IhhParams& params, Rng& rng, SolveCounters& counters);

// Full pipeline: sp_solve, stop early if already feasible, otherwise
// main_loop then feas_path. wall_seconds covers exactly this call.
SolveReport solve(const Instance& instance, const SolveConfig& config);

}  // namespace odimcf
