#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace odimcf {

using NodeId = std::int32_t;
using ArcId = std::int32_t;
using CommodityId = std::int32_t;

constexpr NodeId kInvalidNode = -1;
constexpr ArcId kInvalidArc = -1;

// Directed capacitated arc. Costs are nonnegative, capacities strictly positive.
struct Arc {
  NodeId tail = kInvalidNode;
  NodeId head = kInvalidNode;
  double cost = 0.0;
  double capacity = 0.0;

  bool operator==(const Arc&) const = default;
};

// One origin-destination demand that must travel on a single path.
struct Commodity {
  NodeId origin = kInvalidNode;
  NodeId destination = kInvalidNode;
  double demand = 0.0;

  bool operator==(const Commodity&) const = default;
};

// A path expressed as consecutive arc ids; empty means unrouted.
using Route = std::vector<ArcId>;

// Immutable directed network. Node ids are dense [0, num_nodes); arc ids are
// positions in arcs(). Construction validates endpoints, cost/capacity signs,
// self-loops and parallel arcs, and builds the out-adjacency index.
class Network {
 public:
  Network(NodeId num_nodes, std::vector<Arc> arcs);

  NodeId num_nodes() const { return num_nodes_; }
  ArcId num_arcs() const { return static_cast<ArcId>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<size_t>(a)]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Arc ids leaving `n`.
  std::span<const ArcId> out_arcs(NodeId n) const;

  double max_arc_cost() const { return max_arc_cost_; }

  bool operator==(const Network& other) const {
    return num_nodes_ == other.num_nodes_ && arcs_ == other.arcs_;
  }

 private:
  NodeId num_nodes_ = 0;
  std::vector<Arc> arcs_;
  // CSR-style adjacency: out_arcs_[out_start_[n] .. out_start_[n+1]) leave n.
  std::vector<ArcId> out_arcs_;
  std::vector<std::int32_t> out_start_;
  double max_arc_cost_ = 0.0;
};

// A network plus the demands to route on it.
struct Instance {
  Network network;
  std::vector<Commodity> commodities;

  Instance(Network net, std::vector<Commodity> comms);

  CommodityId num_commodities() const {
    return static_cast<CommodityId>(commodities.size());
  }

  bool operator==(const Instance& other) const {
    return network == other.network && commodities == other.commodities;
  }
};

// True iff `route` is a simple origin->destination path for `commodity`:
// consecutive arcs chain tail-to-head, no node repeats, empty allowed.
// Unknown arc ids throw std::out_of_range.
bool validate_route(const Network& network, const Commodity& commodity,
                    const Route& route);

// Current routing of every commodity plus incrementally maintained arc loads.
// Holds a pointer to the instance, which must outlive the state.
class FlowState {
 public:
  explicit FlowState(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const Route& route(CommodityId k) const {
    return routes_[static_cast<size_t>(k)];
  }
  const std::vector<Route>& routes() const { return routes_; }
  double arc_load(ArcId a) const { return loads_[static_cast<size_t>(a)]; }
  std::span<const double> arc_loads() const { return loads_; }

  // Replaces commodity k's route, updating loads incrementally.
  void set_route(CommodityId k, Route route);
  // Removes and returns commodity k's route (k becomes unrouted).
  Route take_route(CommodityId k);

  bool uses_arc(CommodityId k, ArcId a) const;

  // Capacity left on `a` for commodity k: everything k itself contributes is
  // excluded, so the result may be negative when other commodities oversubscribe.
  double residual_capacity(ArcId a, CommodityId k) const;

  // Loads recomputed from the routes, for drift checks.
  std::vector<double> recomputed_loads() const;

  bool operator==(const FlowState& other) const {
    return routes_ == other.routes_;
  }

 private:
  const Instance* instance_;
  std::vector<Route> routes_;
  std::vector<double> loads_;
};

// Relative slack allowed when comparing load against capacity.
constexpr double kCapacityTolerance = 1e-9;

// True iff every commodity is routed and every arc load fits its capacity
// (load <= capacity * (1 + kCapacityTolerance)).
bool capacity_feasible(const FlowState& state);

// Number of arcs whose load exceeds capacity beyond tolerance.
ArcId count_violated_arcs(const FlowState& state);

// Objective value: sum over commodities of demand * (route cost).
double total_cost(const FlowState& state);

}  // namespace odimcf
