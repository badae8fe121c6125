#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "odimcf/model.hpp"
#include "odimcf/pricing.hpp"

namespace odimcf {

// Cheapest path and its cost under whatever per-arc pricing produced it.
// An empty route with cost 0 means the destination is unreachable.
struct PathResult {
  Route route;
  double cost = 0.0;
};

// Dijkstra with reusable scratch buffers, sized for one network. Ties are
// broken deterministically: among equal-cost heap entries the lower node id
// pops first, and an equal-cost relaxation never replaces the label that
// arrived first.
class ShortestPathSolver {
 public:
  explicit ShortestPathSolver(const Network& network)
      : network_(&network),
        dist_(static_cast<size_t>(network.num_nodes()), 0.0),
        parent_(static_cast<size_t>(network.num_nodes()), kInvalidArc),
        epoch_seen_(static_cast<size_t>(network.num_nodes()), 0),
        settled_(static_cast<size_t>(network.num_nodes()), false) {}

  // CostFn: double(ArcId). Every evaluated arc cost must be finite and >= 0;
  // anything else throws std::domain_error.
  template <typename CostFn>
  PathResult solve(NodeId origin, NodeId destination, CostFn&& arc_cost) {
    const Network& net = *network_;
    ++epoch_;
    heap_.clear();

    label(origin, 0.0, kInvalidArc);
    heap_.push_back({0.0, origin});

    while (!heap_.empty()) {
      const HeapEntry top = heap_.front();
      std::pop_heap(heap_.begin(), heap_.end(), HeapAfter{});
      heap_.pop_back();
      const NodeId u = top.node;
      if (settled_[static_cast<size_t>(u)]) continue;
      settled_[static_cast<size_t>(u)] = true;
      if (u == destination) break;

      for (ArcId id : net.out_arcs(u)) {
        const double c = arc_cost(id);
        if (!(std::isfinite(c) && c >= 0.0))
          throw std::domain_error("shortest path: arc cost must be finite and >= 0");
        const NodeId v = net.arc(id).head;
        const double cand = top.dist + c;
        if (!seen(v) || cand < dist_[static_cast<size_t>(v)]) {
          label(v, cand, id);
          heap_.push_back({cand, v});
          std::push_heap(heap_.begin(), heap_.end(), HeapAfter{});
        }
      }
    }

    PathResult result;
    if (!seen(destination) || !settled_[static_cast<size_t>(destination)])
      return result;
    result.cost = dist_[static_cast<size_t>(destination)];
    for (NodeId at = destination; at != origin;) {
      const ArcId via = parent_[static_cast<size_t>(at)];
      result.route.push_back(via);
      at = net.arc(via).tail;
    }
    std::reverse(result.route.begin(), result.route.end());
    return result;
  }

 private:
  struct HeapEntry {
    double dist;
    NodeId node;
  };
  // Min-heap order on (dist, node id).
  struct HeapAfter {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
      if (a.dist != b.dist) return a.dist > b.dist;
      return a.node > b.node;
    }
  };

  bool seen(NodeId n) const { return epoch_seen_[static_cast<size_t>(n)] == epoch_; }

  void label(NodeId n, double d, ArcId via) {
    if (!seen(n)) {
      epoch_seen_[static_cast<size_t>(n)] = epoch_;
      settled_[static_cast<size_t>(n)] = false;
    }
    dist_[static_cast<size_t>(n)] = d;
    parent_[static_cast<size_t>(n)] = via;
  }

  const Network* network_;
  std::vector<double> dist_;
  std::vector<ArcId> parent_;
  std::vector<std::uint32_t> epoch_seen_;
  std::vector<char> settled_;
  std::vector<HeapEntry> heap_;
  std::uint32_t epoch_ = 0;
};

// Cheapest path under the plain arc costs, capacities ignored.
PathResult sp_original(const Network& network, const Commodity& commodity,
                       ShortestPathSolver& solver);

// Cheapest path under market costs for commodity k given the current state.
PathResult sp_market(const FlowState& state, const IhhParams& params,
                     CommodityId k, ShortestPathSolver& solver);

// Cheapest path under feasible costs for commodity k; a result cost >= big_m
// means every path to the destination crosses an arc that cannot take k.
PathResult sp_feasible(const FlowState& state, const IhhParams& params,
                       CommodityId k, ShortestPathSolver& solver);

}  // namespace odimcf
