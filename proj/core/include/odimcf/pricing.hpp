#pragma once

#include <cstdint>

#include "odimcf/model.hpp"

namespace odimcf {

// Knobs of the market pricing scheme. beta scales how quickly congestion is
// felt, mu prices one unit of scarcity, pi sharpens the congestion response.
// Reroute budgets: a commodity reroutes freely lambda1 times, then faces a
// shrinking hurdle that reaches zero at lambda0 - 1 reroutes. big_m is the
// prohibitive cost stamped on arcs that cannot take the commodity; any value
// >= max arc cost * num nodes keeps it above every real path cost.
struct IhhParams {
  double beta = 1.0;
  double mu = 1.0;
  double pi = 1.0;
  std::int32_t lambda0 = 43;
  std::int32_t lambda1 = 10;
  double big_m = 0.0;
};

// Throws std::invalid_argument on nonpositive beta/mu/pi/big_m or
// lambda1 >= lambda0.
void validate_params(const IhhParams& params);

// Congestion surcharge for placing `demand` on an arc with `residual` spare
// capacity: mu * max(0, (beta + demand - residual) / beta) ^ pi.
// Zero when residual >= beta + demand, exactly mu when residual == demand.
double scarcity_cost(const IhhParams& params, double residual, double demand);

// Scarcity surcharge plus the arc's own cost.
double market_cost(const IhhParams& params, const Arc& arc, double residual,
                   double demand);

// Market cost of a whole route for commodity k under the current state,
// pricing each arc with the capacity left by the other commodities.
// Empty routes cost 0.
double route_market_cost(const IhhParams& params, const FlowState& state,
                         const Route& route, CommodityId k);

// Arc cost if commodity k fits on the arc alongside the others, big_m if not.
double feasible_arc_cost(const IhhParams& params, const FlowState& state,
                         ArcId a, CommodityId k);

// Sum of feasible_arc_cost along the route; >= big_m iff some arc can't take k.
double feasible_route_cost(const IhhParams& params, const FlowState& state,
                           const Route& route, CommodityId k);

// Willingness-to-switch factor as a function of reroute count lambda:
// 1 below lambda1, then 1 - ((lambda - lambda1) / (lambda0 - lambda1 - 1))^e
// clamped to [0, 1]. Zero for every lambda >= lambda0 - 1.
double hurdle_multiplier(const IhhParams& params, std::int32_t lambda);

// Instance-derived defaults:
//   beta  = max(sqrt(2)/2 * geomean(capacities), geomean(demands))
//   mu    = geomean(positive costs) * sqrt(e)
//   pi    = e^e
//   big_m = max arc cost * num nodes
// Zero-cost arcs are excluded from the mu geomean; throws std::domain_error
// if every arc cost is zero.
IhhParams default_params(const Instance& instance);

}  // namespace odimcf
