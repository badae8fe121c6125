#pragma once

#include <cstdint>
#include <vector>

#include "odimcf/model.hpp"

namespace odimcf {

// Recipe for a random instance. Nodes are scattered uniformly in the unit
// square; arc endpoints are sampled with probability proportional to
// distance^-distance_decay, so short arcs dominate. Costs are an affine map
// of arc length hitting cost_min at the shortest arc and cost_p90 at the
// 90th-percentile arc exactly. Capacities are sized from one concrete
// routing (the certificate) scaled by capacity_headroom, which keeps every
// instance solvable while leaving the network congested.
struct GenSpec {
  NodeId num_nodes = 0;
  ArcId num_arcs = 0;
  CommodityId num_commodities = 0;
  double cost_min = 10.0;
  double cost_p90 = 2000.0;
  double demand_min = 5.0;
  double demand_max = 25.0;
  // hub_fraction of nodes become hubs; hub_commodity_fraction of commodities
  // are forced to run hub-to-hub.
  double hub_fraction = 0.0;
  double hub_commodity_fraction = 0.0;
  double distance_decay = 2.0;
  // Arc capacity = headroom * (certificate load). At 1.0 the certificate is
  // the only wiggle-free packing and iterative solvers stall on near-misses;
  // 2.25 keeps instances congested (shortest paths alone overload arcs)
  // while leaving enough slack that rerouting can actually finish the job.
  double capacity_headroom = 2.25;
  std::uint64_t seed = 0;
};

struct GenResult {
  Instance instance;
  // Per-commodity routes that fit the capacities exactly, one per commodity.
  std::vector<Route> certificate;
};

// Builds a strongly connected instance from `spec`. Deterministic: the same
// spec (seed included) produces the identical instance. Throws
// std::invalid_argument on unsatisfiable specs (arc count below what strong
// connectivity needs, above num_nodes*(num_nodes-1), hub commodities with
// fewer than two hubs, bad ranges).
GenResult generate(const GenSpec& spec);

}  // namespace odimcf
