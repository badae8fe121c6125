#include "odimcf/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace odimcf {

void validate_params(const IhhParams& params) {
  if (!(params.beta > 0.0)) throw std::invalid_argument("params: beta must be > 0");
  if (!(params.mu > 0.0)) throw std::invalid_argument("params: mu must be > 0");
  if (!(params.pi > 0.0)) throw std::invalid_argument("params: pi must be > 0");
  if (!(params.big_m > 0.0)) throw std::invalid_argument("params: big_m must be > 0");
  if (params.lambda1 >= params.lambda0)
    throw std::invalid_argument("params: lambda1 must be < lambda0");
}

double scarcity_cost(const IhhParams& params, double residual, double demand) {
  const double pressure = (params.beta + demand - residual) / params.beta;
  if (pressure <= 0.0) return 0.0;
  return params.mu * std::pow(pressure, params.pi);
}

double market_cost(const IhhParams& params, const Arc& arc, double residual,
                   double demand) {
  return scarcity_cost(params, residual, demand) + arc.cost;
}

double route_market_cost(const IhhParams& params, const FlowState& state,
                         const Route& route, CommodityId k) {
  const Instance& inst = state.instance();
  const double demand = inst.commodities[static_cast<size_t>(k)].demand;
  double total = 0.0;
  for (ArcId a : route) {
    total += market_cost(params, inst.network.arc(a), state.residual_capacity(a, k),
                         demand);
  }
  return total;
}

double feasible_arc_cost(const IhhParams& params, const FlowState& state,
                         ArcId a, CommodityId k) {
  const Instance& inst = state.instance();
  const double demand = inst.commodities[static_cast<size_t>(k)].demand;
  if (state.residual_capacity(a, k) - demand >= 0.0) return inst.network.arc(a).cost;
  return params.big_m;
}

double feasible_route_cost(const IhhParams& params, const FlowState& state,
                           const Route& route, CommodityId k) {
  double total = 0.0;
  for (ArcId a : route) total += feasible_arc_cost(params, state, a, k);
  return total;
}

double hurdle_multiplier(const IhhParams& params, std::int32_t lambda) {
  if (lambda < params.lambda1) return 1.0;
  if (lambda >= params.lambda0 - 1) return 0.0;
  const double span = static_cast<double>(params.lambda0 - params.lambda1 - 1);
  const double frac = static_cast<double>(lambda - params.lambda1) / span;
  const double value = 1.0 - std::pow(frac, std::numbers::e);
  return std::clamp(value, 0.0, 1.0);
}

namespace {

// Geometric mean via mean of logs; values must be positive.
double geomean(const std::vector<double>& values) {
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

}  // namespace

IhhParams default_params(const Instance& instance) {
  const Network& net = instance.network;
  if (net.num_arcs() == 0) throw std::domain_error("default_params: network has no arcs");
  if (instance.commodities.empty())
    throw std::domain_error("default_params: instance has no commodities");

  std::vector<double> capacities, positive_costs, demands;
  capacities.reserve(static_cast<size_t>(net.num_arcs()));
  for (const Arc& a : net.arcs()) {
    capacities.push_back(a.capacity);
    if (a.cost > 0.0) positive_costs.push_back(a.cost);
  }
  if (positive_costs.empty())
    throw std::domain_error("default_params: every arc cost is zero");
  demands.reserve(instance.commodities.size());
  for (const Commodity& c : instance.commodities) demands.push_back(c.demand);

  IhhParams params;
  params.beta = std::max(std::numbers::sqrt2 / 2.0 * geomean(capacities),
                         geomean(demands));
  params.mu = geomean(positive_costs) * std::sqrt(std::numbers::e);
  params.pi = std::pow(std::numbers::e, std::numbers::e);
  params.lambda0 = 43;
  params.lambda1 = 10;
  params.big_m = net.max_arc_cost() * static_cast<double>(net.num_nodes());
  return params;
}

}  // namespace odimcf
