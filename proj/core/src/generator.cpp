#include "odimcf/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

#include "odimcf/rng.hpp"
#include "odimcf/shortest_path.hpp"

namespace odimcf {

namespace {

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("generate: " + msg);
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double dist(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct CandidateArc {
  NodeId tail;
  NodeId head;
  double length;
};

// Strongly connected component id per node (Kosaraju). Returns the count.
int scc_components(NodeId num_nodes, const std::vector<CandidateArc>& arcs,
                   std::vector<int>& comp) {
  const auto n = static_cast<size_t>(num_nodes);
  std::vector<std::vector<NodeId>> fwd(n), rev(n);
  for (const CandidateArc& a : arcs) {
    fwd[static_cast<size_t>(a.tail)].push_back(a.head);
    rev[static_cast<size_t>(a.head)].push_back(a.tail);
  }

  std::vector<char> seen(n, 0);
  std::vector<NodeId> finish_order;
  finish_order.reserve(n);
  std::vector<std::pair<NodeId, size_t>> stack;
  for (NodeId s = 0; s < num_nodes; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    seen[static_cast<size_t>(s)] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& out = fwd[static_cast<size_t>(u)];
      if (next < out.size()) {
        const NodeId v = out[next++];
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          stack.push_back({v, 0});
        }
      } else {
        finish_order.push_back(u);
        stack.pop_back();
      }
    }
  }

  comp.assign(n, -1);
  int count = 0;
  std::vector<NodeId> dfs;
  for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
    if (comp[static_cast<size_t>(*it)] != -1) continue;
    dfs.push_back(*it);
    comp[static_cast<size_t>(*it)] = count;
    while (!dfs.empty()) {
      const NodeId u = dfs.back();
      dfs.pop_back();
      for (NodeId v : rev[static_cast<size_t>(u)]) {
        if (comp[static_cast<size_t>(v)] == -1) {
          comp[static_cast<size_t>(v)] = count;
          dfs.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

bool strongly_connected(NodeId num_nodes, const std::vector<CandidateArc>& arcs) {
  if (num_nodes <= 1) return true;
  std::vector<int> comp;
  return scc_components(num_nodes, arcs, comp) == 1;
}

// Draws `want` distinct ordered pairs, each pair picked with probability
// proportional to length^-decay, by rejection against the full pair list.
std::vector<CandidateArc> sample_arcs(const std::vector<Point>& pts, ArcId want,
                                      double decay, Rng& rng) {
  const auto n = static_cast<NodeId>(pts.size());
  std::vector<CandidateArc> pairs;
  pairs.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1));
  std::vector<double> cumulative;
  cumulative.reserve(pairs.capacity());
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      const double length = std::max(dist(pts[static_cast<size_t>(i)],
                                          pts[static_cast<size_t>(j)]),
                                     1e-12);
      pairs.push_back({i, j, length});
      total += std::pow(length, -decay);
      cumulative.push_back(total);
    }
  }

  std::vector<char> taken(pairs.size(), 0);
  std::vector<CandidateArc> out;
  out.reserve(static_cast<size_t>(want));
  while (out.size() < static_cast<size_t>(want)) {
    const double x = rng.uniform01() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    size_t idx = static_cast<size_t>(it - cumulative.begin());
    if (idx >= pairs.size()) idx = pairs.size() - 1;
    if (taken[idx]) continue;
    taken[idx] = 1;
    out.push_back(pairs[idx]);
  }
  return out;
}

// Makes the graph strongly connected by repeatedly adding the shortest
// missing arc from a sink component to a source component of the condensation.
void repair_connectivity(const std::vector<Point>& pts,
                         std::vector<CandidateArc>& arcs) {
  const auto n = static_cast<NodeId>(pts.size());
  std::vector<int> comp;
  while (true) {
    const int count = scc_components(n, arcs, comp);
    if (count <= 1) return;
    std::vector<char> has_out(static_cast<size_t>(count), 0);
    std::vector<char> has_in(static_cast<size_t>(count), 0);
    for (const CandidateArc& a : arcs) {
      const int ct = comp[static_cast<size_t>(a.tail)];
      const int ch = comp[static_cast<size_t>(a.head)];
      if (ct != ch) {
        has_out[static_cast<size_t>(ct)] = 1;
        has_in[static_cast<size_t>(ch)] = 1;
      }
    }
    CandidateArc best{kInvalidNode, kInvalidNode, 0.0};
    for (NodeId u = 0; u < n; ++u) {
      if (has_out[static_cast<size_t>(comp[static_cast<size_t>(u)])]) continue;
      for (NodeId v = 0; v < n; ++v) {
        if (comp[static_cast<size_t>(v)] == comp[static_cast<size_t>(u)]) continue;
        if (has_in[static_cast<size_t>(comp[static_cast<size_t>(v)])]) continue;
        const double length =
            dist(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]);
        if (best.tail == kInvalidNode || length < best.length ||
            (length == best.length &&
             std::pair{u, v} < std::pair{best.tail, best.head})) {
          best = {u, v, length};
        }
      }
    }
    arcs.push_back(best);
  }
}

// Drops the longest arcs whose removal keeps the graph strongly connected
// until the target count is reached.
void trim_to_count(NodeId num_nodes, std::vector<CandidateArc>& arcs, ArcId target) {
  if (arcs.size() <= static_cast<size_t>(target)) return;
  std::vector<size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (arcs[a].length != arcs[b].length) return arcs[a].length > arcs[b].length;
    return std::pair{arcs[a].tail, arcs[a].head} > std::pair{arcs[b].tail, arcs[b].head};
  });

  std::vector<char> removed(arcs.size(), 0);
  size_t remaining = arcs.size();
  std::vector<CandidateArc> trial;
  for (size_t idx : order) {
    if (remaining == static_cast<size_t>(target)) break;
    trial.clear();
    for (size_t i = 0; i < arcs.size(); ++i)
      if (!removed[i] && i != idx) trial.push_back(arcs[i]);
    if (strongly_connected(num_nodes, trial)) {
      removed[idx] = 1;
      --remaining;
    }
  }
  check(remaining == static_cast<size_t>(target),
        "num_arcs too small to keep the network strongly connected");

  std::vector<CandidateArc> kept;
  kept.reserve(remaining);
  for (size_t i = 0; i < arcs.size(); ++i)
    if (!removed[i]) kept.push_back(arcs[i]);
  arcs = std::move(kept);
}

// Affine map of arc length to cost: the shortest arc lands on cost_min and
// the 90th-percentile arc (nearest rank) lands on cost_p90, both exactly.
std::vector<double> assign_costs(const std::vector<CandidateArc>& arcs,
                                 double cost_min, double cost_p90) {
  std::vector<double> lengths(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) lengths[i] = arcs[i].length;
  std::vector<double> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  const double len_min = sorted.front();
  const size_t rank90 =
      static_cast<size_t>(std::ceil(0.9 * static_cast<double>(sorted.size()))) - 1;
  const double len_p90 = sorted[rank90];

  std::vector<double> costs(arcs.size(), cost_min);
  if (len_p90 > len_min) {
    // barycentric form so the two anchor lengths map to the requested costs
    // exactly, rounding included
    for (size_t i = 0; i < arcs.size(); ++i) {
      const double t = (lengths[i] - len_min) / (len_p90 - len_min);
      costs[i] = cost_min * (1.0 - t) + cost_p90 * t;
    }
  }
  return costs;
}

// True iff no arc can be undercut by a multi-arc path under the given costs.
bool shortest_arc_property_holds(NodeId num_nodes,
                                 const std::vector<CandidateArc>& arcs,
                                 const std::vector<double>& costs) {
  const auto n = static_cast<size_t>(num_nodes);
  std::vector<std::vector<std::pair<NodeId, double>>> adj(n);
  for (size_t i = 0; i < arcs.size(); ++i)
    adj[static_cast<size_t>(arcs[i].tail)].push_back({arcs[i].head, costs[i]});

  constexpr double kUnreached = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n);
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (NodeId s = 0; s < num_nodes; ++s) {
    dist.assign(n, kUnreached);
    dist[static_cast<size_t>(s)] = 0.0;
    heap.push({0.0, s});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[static_cast<size_t>(u)]) continue;
      for (const auto& [v, c] : adj[static_cast<size_t>(u)]) {
        if (d + c < dist[static_cast<size_t>(v)]) {
          dist[static_cast<size_t>(v)] = d + c;
          heap.push({d + c, v});
        }
      }
    }
    for (size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].tail == s && dist[static_cast<size_t>(arcs[i].head)] < costs[i])
        return false;
  }
  return true;
}

}  // namespace

GenResult generate(const GenSpec& spec) {
  check(spec.num_nodes >= 0 && spec.num_arcs >= 0 && spec.num_commodities >= 0,
        "counts must be nonnegative");
  check(static_cast<std::int64_t>(spec.num_arcs) <=
            static_cast<std::int64_t>(spec.num_nodes) * (spec.num_nodes - 1),
        "num_arcs exceeds the number of distinct ordered node pairs");
  if (spec.num_nodes >= 2)
    check(spec.num_arcs >= spec.num_nodes,
          "num_arcs too small to keep the network strongly connected");
  if (spec.num_commodities > 0)
    check(spec.num_nodes >= 2, "commodities need at least two nodes");
  check(spec.cost_min > 0.0 && spec.cost_p90 >= spec.cost_min,
        "need 0 < cost_min <= cost_p90");
  check(spec.demand_min > 0.0 && spec.demand_max >= spec.demand_min,
        "need 0 < demand_min <= demand_max");
  check(spec.hub_fraction >= 0.0 && spec.hub_fraction <= 1.0 &&
            spec.hub_commodity_fraction >= 0.0 && spec.hub_commodity_fraction <= 1.0,
        "hub fractions must lie in [0, 1]");
  check(spec.distance_decay >= 0.0, "distance_decay must be >= 0");
  check(spec.capacity_headroom >= 1.0, "capacity_headroom must be >= 1");

  const auto num_hub_commodities = static_cast<CommodityId>(
      std::llround(spec.hub_commodity_fraction * spec.num_commodities));
  const auto num_hubs =
      static_cast<NodeId>(std::llround(spec.hub_fraction * spec.num_nodes));
  check(num_hub_commodities == 0 || num_hubs >= 2,
        "hub commodities requested but fewer than two hubs");

  Rng rng(spec.seed);

  // Redraw the whole geometry whenever the affine cost map lets a multi-arc
  // path undercut a direct arc; each attempt continues the same draw stream.
  std::vector<CandidateArc> arcs;
  std::vector<double> costs;
  constexpr int kMaxAttempts = 1000;
  int attempt = 0;
  for (;; ++attempt) {
    check(attempt < kMaxAttempts,
          "no geometry without arc-cost shortcuts after 1000 attempts");
    std::vector<Point> pts(static_cast<size_t>(spec.num_nodes));
    for (Point& p : pts) {
      p.x = rng.uniform01();
      p.y = rng.uniform01();
    }
    arcs = sample_arcs(pts, spec.num_arcs, spec.distance_decay, rng);
    repair_connectivity(pts, arcs);
    trim_to_count(spec.num_nodes, arcs, spec.num_arcs);
    costs = assign_costs(arcs, spec.cost_min, spec.cost_p90);
    if (shortest_arc_property_holds(spec.num_nodes, arcs, costs)) break;
  }

  std::vector<NodeId> hubs;
  if (num_hubs > 0) {
    std::vector<NodeId> ids(static_cast<size_t>(spec.num_nodes));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    hubs.assign(ids.begin(), ids.begin() + num_hubs);
  }

  // Uniform endpoint draw over `pool` excluding `skip`, one draw.
  const auto pick_excluding = [&rng](const std::vector<NodeId>& pool, NodeId skip) {
    auto i = rng.bounded(pool.size() - 1);
    const auto skip_at = static_cast<std::uint64_t>(
        std::find(pool.begin(), pool.end(), skip) - pool.begin());
    if (i >= skip_at) ++i;
    return pool[static_cast<size_t>(i)];
  };

  std::vector<NodeId> all_nodes(static_cast<size_t>(spec.num_nodes));
  std::iota(all_nodes.begin(), all_nodes.end(), 0);

  std::vector<Commodity> commodities;
  commodities.reserve(static_cast<size_t>(spec.num_commodities));
  for (CommodityId k = 0; k < spec.num_commodities; ++k) {
    const bool hub_pair = k < num_hub_commodities;
    const std::vector<NodeId>& pool = hub_pair ? hubs : all_nodes;
    const NodeId origin = pool[static_cast<size_t>(rng.bounded(pool.size()))];
    const NodeId destination = pick_excluding(pool, origin);
    double demand = rng.uniform(spec.demand_min, spec.demand_max);
    demand = std::clamp(std::round(demand * 10.0) / 10.0, spec.demand_min,
                        spec.demand_max);
    commodities.push_back({origin, destination, demand});
  }

  // Route every commodity on a shortest path under fresh random integer arc
  // lengths, then size each capacity as the sum of demands crossing the arc
  // times the headroom factor. That routing is kept as the certificate.
  std::vector<Arc> with_unit_caps(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i)
    with_unit_caps[i] = {arcs[i].tail, arcs[i].head, costs[i], 1.0};
  const Network routing_net(spec.num_nodes, std::move(with_unit_caps));
  ShortestPathSolver solver(routing_net);

  std::vector<double> capacities(arcs.size(), 0.0);
  std::vector<Route> certificate(commodities.size());
  std::vector<double> random_lengths(arcs.size());
  for (size_t k = 0; k < commodities.size(); ++k) {
    for (double& len : random_lengths)
      len = static_cast<double>(1 + rng.bounded(10000));
    PathResult path =
        solver.solve(commodities[k].origin, commodities[k].destination,
                     [&](ArcId a) { return random_lengths[static_cast<size_t>(a)]; });
    for (ArcId a : path.route) capacities[static_cast<size_t>(a)] += commodities[k].demand;
    certificate[k] = std::move(path.route);
  }
  for (double& cap : capacities)
    cap = cap == 0.0 ? spec.demand_min : cap * spec.capacity_headroom;

  std::vector<Arc> final_arcs(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i)
    final_arcs[i] = {arcs[i].tail, arcs[i].head, costs[i], capacities[i]};
  return {Instance(Network(spec.num_nodes, std::move(final_arcs)), std::move(commodities)),
          std::move(certificate)};
}

}  // namespace odimcf
