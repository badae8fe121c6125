#include "odimcf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "odimcf/shortest_path.hpp"

namespace odimcf {

namespace {

struct PricedRoute {
  Route route;
  double cost = 0.0;  // plain route cost, demand not applied
};

// All simple origin->destination paths via DFS, cheapest first.
std::vector<PricedRoute> enumerate_paths(const Network& net, const Commodity& com,
                                         std::uint64_t max_paths) {
  std::vector<PricedRoute> paths;
  std::vector<char> on_path(static_cast<size_t>(net.num_nodes()), 0);
  Route arc_stack;

  struct Frame {
    NodeId node;
    size_t next_out = 0;
  };
  std::vector<Frame> stack{{com.origin}};
  on_path[static_cast<size_t>(com.origin)] = 1;
  double cost = 0.0;

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto out = net.out_arcs(frame.node);
    if (frame.node == com.destination || frame.next_out >= out.size()) {
      if (frame.node == com.destination) {
        if (paths.size() >= max_paths)
          throw OracleLimitError(
              "too large: more than " + std::to_string(max_paths) +
              " simple paths for commodity " + std::to_string(com.origin) + "->" +
              std::to_string(com.destination));
        paths.push_back({arc_stack, cost});
      }
      on_path[static_cast<size_t>(frame.node)] = 0;
      if (!arc_stack.empty()) {
        cost -= net.arc(arc_stack.back()).cost;
        arc_stack.pop_back();
      }
      stack.pop_back();
      continue;
    }
    const ArcId a = out[frame.next_out++];
    const NodeId next = net.arc(a).head;
    if (on_path[static_cast<size_t>(next)]) continue;
    on_path[static_cast<size_t>(next)] = 1;
    arc_stack.push_back(a);
    cost += net.arc(a).cost;
    stack.push_back({next});
  }

  std::sort(paths.begin(), paths.end(), [](const PricedRoute& a, const PricedRoute& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.route < b.route;
  });
  return paths;
}

}  // namespace

OracleResult exact_solve(const Instance& instance, const OracleLimits& limits) {
  const Network& net = instance.network;
  const auto num_k = static_cast<size_t>(instance.num_commodities());
  if (instance.num_commodities() > limits.max_commodities)
    throw OracleLimitError("too large: " + std::to_string(num_k) +
                           " commodities exceed the exhaustive limit of " +
                           std::to_string(limits.max_commodities));

  OracleResult result;
  if (num_k == 0) {
    result.optimal_cost = 0.0;
    return result;
  }

  // Branch on commodities in descending demand so capacity conflicts surface
  // early; sorting on (demand, endpoints) keeps the cost independent of the
  // input order of interchangeable commodities.
  std::vector<size_t> order(num_k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const Commodity& ca = instance.commodities[a];
    const Commodity& cb = instance.commodities[b];
    if (ca.demand != cb.demand) return ca.demand > cb.demand;
    return std::tuple{ca.origin, ca.destination, a} <
           std::tuple{cb.origin, cb.destination, b};
  });

  std::vector<std::vector<PricedRoute>> choices(num_k);
  for (size_t pos = 0; pos < num_k; ++pos) {
    const size_t k = order[pos];
    choices[pos] =
        enumerate_paths(net, instance.commodities[k], limits.max_paths_per_commodity);
    if (choices[pos].empty()) return result;  // unreachable: no full routing exists
  }

  // cheapest_rest[pos] = lower bound on the demand-weighted cost of routing
  // commodities pos.. with capacities ignored.
  std::vector<double> cheapest_rest(num_k + 1, 0.0);
  for (size_t pos = num_k; pos-- > 0;) {
    const double demand = instance.commodities[order[pos]].demand;
    cheapest_rest[pos] = cheapest_rest[pos + 1] + demand * choices[pos].front().cost;
  }

  std::vector<double> load(static_cast<size_t>(net.num_arcs()), 0.0);
  std::vector<size_t> pick(num_k, 0);
  std::vector<size_t> best_pick;
  double best = std::numeric_limits<double>::infinity();

  // Depth-first over per-commodity path choices, cheapest path first.
  const auto fits = [&](const Route& route, double demand) {
    for (ArcId a : route) {
      const double cap = net.arc(a).capacity;
      if (load[static_cast<size_t>(a)] + demand > cap * (1.0 + kCapacityTolerance))
        return false;
    }
    return true;
  };

  size_t pos = 0;
  double cost_so_far = 0.0;
  pick[0] = 0;
  while (true) {
    if (pos == num_k) {
      best = cost_so_far;  // bound test below guarantees strict improvement
      best_pick.assign(pick.begin(), pick.end());
      // backtrack off the complete assignment
      --pos;
      const double d = instance.commodities[order[pos]].demand;
      const Route& r = choices[pos][pick[pos]].route;
      for (ArcId a : r) load[static_cast<size_t>(a)] -= d;
      cost_so_far -= d * choices[pos][pick[pos]].cost;
      ++pick[pos];
      continue;
    }

    bool descended = false;
    const double demand = instance.commodities[order[pos]].demand;
    while (pick[pos] < choices[pos].size()) {
      if (++result.nodes_explored > limits.max_nodes_explored)
        throw OracleLimitError("too large: branch-and-bound exceeded " +
                               std::to_string(limits.max_nodes_explored) + " nodes");
      const PricedRoute& candidate = choices[pos][pick[pos]];
      const double bound = cost_so_far + demand * candidate.cost + cheapest_rest[pos + 1];
      if (bound >= best) {
        // paths are sorted by cost: every later choice is bounded out too
        pick[pos] = choices[pos].size();
        break;
      }
      if (!fits(candidate.route, demand)) {
        ++pick[pos];
        continue;
      }
      for (ArcId a : candidate.route) load[static_cast<size_t>(a)] += demand;
      cost_so_far += demand * candidate.cost;
      ++pos;
      if (pos < num_k) pick[pos] = 0;
      descended = true;
      break;
    }
    if (descended) continue;
    if (pos == num_k) continue;

    // exhausted this level: backtrack
    if (pos == 0) break;
    --pos;
    const double d = instance.commodities[order[pos]].demand;
    const Route& r = choices[pos][pick[pos]].route;
    for (ArcId a : r) load[static_cast<size_t>(a)] -= d;
    cost_so_far -= d * choices[pos][pick[pos]].cost;
    ++pick[pos];
  }

  if (best_pick.empty()) return result;  // every combination violated capacity

  result.optimal_cost = best;
  result.optimal_routes.assign(num_k, {});
  for (size_t p = 0; p < num_k; ++p)
    result.optimal_routes[order[p]] = choices[p][best_pick[p]].route;
  return result;
}

double lower_bound(const Instance& instance) {
  ShortestPathSolver solver(instance.network);
  double bound = 0.0;
  for (const Commodity& com : instance.commodities) {
    const PathResult sp = sp_original(instance.network, com, solver);
    if (sp.route.empty()) return std::numeric_limits<double>::infinity();
    bound += com.demand * sp.cost;
  }
  return bound;
}

}  // namespace odimcf
