#include "odimcf/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace odimcf {

namespace {

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Network::Network(NodeId num_nodes, std::vector<Arc> arcs)
    : num_nodes_(num_nodes), arcs_(std::move(arcs)) {
  check(num_nodes_ >= 0, "network: negative node count");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    const std::string at = "arc " + std::to_string(i);
    check(a.tail >= 0 && a.tail < num_nodes_, at + ": tail out of range");
    check(a.head >= 0 && a.head < num_nodes_, at + ": head out of range");
    check(a.tail != a.head, at + ": self-loop");
    check(std::isfinite(a.cost) && a.cost >= 0.0, at + ": cost must be finite and >= 0");
    check(std::isfinite(a.capacity) && a.capacity > 0.0,
          at + ": capacity must be finite and > 0");
    check(seen.insert({a.tail, a.head}).second,
          at + ": parallel arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
    max_arc_cost_ = std::max(max_arc_cost_, a.cost);
  }

  out_start_.assign(static_cast<size_t>(num_nodes_) + 1, 0);
  for (const Arc& a : arcs_) ++out_start_[static_cast<size_t>(a.tail) + 1];
  for (size_t n = 1; n < out_start_.size(); ++n) out_start_[n] += out_start_[n - 1];
  out_arcs_.resize(arcs_.size());
  std::vector<std::int32_t> fill(out_start_.begin(), out_start_.end() - 1);
  for (size_t i = 0; i < arcs_.size(); ++i) {
    out_arcs_[static_cast<size_t>(fill[static_cast<size_t>(arcs_[i].tail)]++)] =
        static_cast<ArcId>(i);
  }
}

std::span<const ArcId> Network::out_arcs(NodeId n) const {
  const auto lo = static_cast<size_t>(out_start_[static_cast<size_t>(n)]);
  const auto hi = static_cast<size_t>(out_start_[static_cast<size_t>(n) + 1]);
  return {out_arcs_.data() + lo, hi - lo};
}

Instance::Instance(Network net, std::vector<Commodity> comms)
    : network(std::move(net)), commodities(std::move(comms)) {
  for (size_t k = 0; k < commodities.size(); ++k) {
    const Commodity& c = commodities[k];
    const std::string at = "commodity " + std::to_string(k);
    check(c.origin >= 0 && c.origin < network.num_nodes(), at + ": origin out of range");
    check(c.destination >= 0 && c.destination < network.num_nodes(),
          at + ": destination out of range");
    check(c.origin != c.destination, at + ": origin equals destination");
    check(std::isfinite(c.demand) && c.demand > 0.0, at + ": demand must be finite and > 0");
  }
}

bool validate_route(const Network& network, const Commodity& commodity,
                    const Route& route) {
  if (route.empty()) return true;
  std::vector<bool> visited(static_cast<size_t>(network.num_nodes()), false);
  NodeId at = commodity.origin;
  visited[static_cast<size_t>(at)] = true;
  for (ArcId id : route) {
    if (id < 0 || id >= network.num_arcs())
      throw std::out_of_range("route references unknown arc id " + std::to_string(id));
    const Arc& a = network.arc(id);
    if (a.tail != at) return false;
    at = a.head;
    if (visited[static_cast<size_t>(at)]) return false;
    visited[static_cast<size_t>(at)] = true;
  }
  return at == commodity.destination;
}

FlowState::FlowState(const Instance& instance)
    : instance_(&instance),
      routes_(static_cast<size_t>(instance.num_commodities())),
      loads_(static_cast<size_t>(instance.network.num_arcs()), 0.0) {}

void FlowState::set_route(CommodityId k, Route route) {
  const double d = instance_->commodities[static_cast<size_t>(k)].demand;
  for (ArcId a : routes_[static_cast<size_t>(k)]) loads_[static_cast<size_t>(a)] -= d;
  for (ArcId a : route) loads_[static_cast<size_t>(a)] += d;
  routes_[static_cast<size_t>(k)] = std::move(route);
}

Route FlowState::take_route(CommodityId k) {
  const double d = instance_->commodities[static_cast<size_t>(k)].demand;
  Route out = std::move(routes_[static_cast<size_t>(k)]);
  routes_[static_cast<size_t>(k)].clear();
  for (ArcId a : out) loads_[static_cast<size_t>(a)] -= d;
  return out;
}

bool FlowState::uses_arc(CommodityId k, ArcId a) const {
  const Route& r = routes_[static_cast<size_t>(k)];
  return std::find(r.begin(), r.end(), a) != r.end();
}

double FlowState::residual_capacity(ArcId a, CommodityId k) const {
  const Arc& arc = instance_->network.arc(a);
  double others = loads_[static_cast<size_t>(a)];
  if (uses_arc(k, a)) others -= instance_->commodities[static_cast<size_t>(k)].demand;
  return arc.capacity - others;
}

std::vector<double> FlowState::recomputed_loads() const {
  std::vector<double> loads(loads_.size(), 0.0);
  for (size_t k = 0; k < routes_.size(); ++k) {
    const double d = instance_->commodities[k].demand;
    for (ArcId a : routes_[k]) loads[static_cast<size_t>(a)] += d;
  }
  return loads;
}

bool capacity_feasible(const FlowState& state) {
  for (const Route& r : state.routes())
    if (r.empty()) return false;
  return count_violated_arcs(state) == 0;
}

ArcId count_violated_arcs(const FlowState& state) {
  const Network& net = state.instance().network;
  ArcId violated = 0;
  for (ArcId a = 0; a < net.num_arcs(); ++a) {
    const double cap = net.arc(a).capacity;
    if (state.arc_load(a) > cap * (1.0 + kCapacityTolerance)) ++violated;
  }
  return violated;
}

double total_cost(const FlowState& state) {
  const Instance& inst = state.instance();
  double total = 0.0;
  for (CommodityId k = 0; k < inst.num_commodities(); ++k) {
    double route_cost = 0.0;
    for (ArcId a : state.route(k)) route_cost += inst.network.arc(a).cost;
    total += inst.commodities[static_cast<size_t>(k)].demand * route_cost;
  }
  return total;
}

}  // namespace odimcf
