#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "odimcf/generator.hpp"
#include "odimcf/instance_io.hpp"
#include "odimcf/shortest_path.hpp"
#include "test_util.hpp"

using namespace odimcf;

namespace {

GenSpec a1_spec(std::uint64_t seed) {
  GenSpec spec;
  spec.num_nodes = 30;
  spec.num_arcs = 90;
  spec.num_commodities = 112;
  spec.seed = seed;
  return spec;
}

// strong connectivity via plain BFS from node 0 in both arc directions,
// independent of the generator's own component machinery
bool strongly_connected_bfs(const Network& net) {
  const auto n = static_cast<size_t>(net.num_nodes());
  auto sweep = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<NodeId> frontier{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!frontier.empty()) {
      const NodeId u = frontier.back();
      frontier.pop_back();
      for (ArcId a = 0; a < net.num_arcs(); ++a) {
        const Arc& arc = net.arc(a);
        const NodeId from = forward ? arc.tail : arc.head;
        const NodeId to = forward ? arc.head : arc.tail;
        if (from != u || seen[static_cast<size_t>(to)]) continue;
        seen[static_cast<size_t>(to)] = 1;
        ++reached;
        frontier.push_back(to);
      }
    }
    return reached == n;
  };
  return sweep(true) && sweep(false);
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
  const GenResult a = generate(a1_spec(3));
  const GenResult b = generate(a1_spec(3));
  CHECK(a.instance == b.instance);
  CHECK(a.certificate == b.certificate);
  CHECK(format_instance(a.instance, &a.certificate) ==
        format_instance(b.instance, &b.certificate));

  const GenResult c = generate(a1_spec(4));
  CHECK(format_instance(a.instance) != format_instance(c.instance));
}

TEST_CASE("generated instances hit the requested shape and cost anchors") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GenResult result = generate(a1_spec(seed));
    const Network& net = result.instance.network;

    CHECK(net.num_nodes() == 30);
    CHECK(net.num_arcs() == 90);
    CHECK(result.instance.num_commodities() == 112);

    std::vector<double> costs;
    for (const Arc& arc : net.arcs()) costs.push_back(arc.cost);
    std::sort(costs.begin(), costs.end());
    CHECK(costs.front() == 10.0);
    // nearest-rank 90th percentile of 90 arcs is the 81st smallest
    CHECK(costs[80] == 2000.0);

    CHECK(strongly_connected_bfs(net));
  }
}

TEST_CASE("demands land on the requested tenth-unit grid") {
  GenSpec spec = a1_spec(0);
  spec.num_commodities = 2000;
  const Instance inst = generate(spec).instance;

  double sum = 0.0;
  for (const Commodity& c : inst.commodities) {
    CHECK(c.demand >= 5.0);
    CHECK(c.demand <= 25.0);
    const double tenths = c.demand * 10.0;
    CHECK(std::abs(tenths - std::round(tenths)) < 1e-9);
    CHECK(c.origin != c.destination);
    sum += c.demand;
  }
  const double mean = sum / 2000.0;
  CHECK(mean == doctest::Approx(15.0).epsilon(0.05));
}

TEST_CASE("certificate routes are valid and size the capacities") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenSpec spec = a1_spec(seed);
    const GenResult result = generate(spec);
    const Instance& inst = result.instance;
    REQUIRE(result.certificate.size() == static_cast<size_t>(inst.num_commodities()));

    FlowState state(inst);
    for (CommodityId k = 0; k < inst.num_commodities(); ++k) {
      const Route& route = result.certificate[static_cast<size_t>(k)];
      CHECK_FALSE(route.empty());
      CHECK(validate_route(inst.network, inst.commodities[static_cast<size_t>(k)], route));
      state.set_route(k, route);
    }
    CHECK(capacity_feasible(state));

    // used arcs carry the headroom multiple of the certificate load; idle
    // arcs got the demand floor
    for (ArcId a = 0; a < inst.network.num_arcs(); ++a) {
      if (state.arc_load(a) > 0.0) {
        CHECK(inst.network.arc(a).capacity ==
              doctest::Approx(state.arc_load(a) * spec.capacity_headroom).epsilon(1e-12));
      } else {
        CHECK(inst.network.arc(a).capacity == 5.0);
      }
    }
  }
}

TEST_CASE("headroom 1 sizes used arcs as the bare demand sum") {
  GenSpec spec = a1_spec(3);
  spec.capacity_headroom = 1.0;
  const GenResult result = generate(spec);
  const Instance& inst = result.instance;

  FlowState state(inst);
  for (CommodityId k = 0; k < inst.num_commodities(); ++k)
    state.set_route(k, result.certificate[static_cast<size_t>(k)]);
  for (ArcId a = 0; a < inst.network.num_arcs(); ++a) {
    if (state.arc_load(a) > 0.0) CHECK(state.arc_load(a) == inst.network.arc(a).capacity);
  }
}

TEST_CASE("no arc can be beaten by a multi-arc path") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    GenSpec spec;
    spec.num_nodes = 12;
    spec.num_arcs = 40;
    spec.num_commodities = 10;
    spec.seed = seed;
    const Network& net = generate(spec).instance.network;

    ShortestPathSolver solver(net);
    for (ArcId a = 0; a < net.num_arcs(); ++a) {
      const Arc& arc = net.arc(a);
      const PathResult sp =
          solver.solve(arc.tail, arc.head, [&](ArcId x) { return net.arc(x).cost; });
      REQUIRE_FALSE(sp.route.empty());
      CHECK(sp.cost >= arc.cost * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("hub commodities draw their endpoints from the hub set only") {
  GenSpec spec;
  spec.num_nodes = 30;
  spec.num_arcs = 90;
  spec.num_commodities = 40;
  spec.hub_fraction = 0.1;            // 3 hubs
  spec.hub_commodity_fraction = 0.8;  // first 32 commodities are hub pairs
  spec.seed = 2;
  const Instance inst = generate(spec).instance;

  std::set<NodeId> endpoints;
  for (CommodityId k = 0; k < 32; ++k) {
    endpoints.insert(inst.commodities[static_cast<size_t>(k)].origin);
    endpoints.insert(inst.commodities[static_cast<size_t>(k)].destination);
  }
  CHECK(endpoints.size() <= 3);
  CHECK(endpoints.size() >= 2);

  // the unconstrained remainder should roam wider than three nodes
  std::set<NodeId> rest;
  for (CommodityId k = 32; k < 40; ++k) {
    rest.insert(inst.commodities[static_cast<size_t>(k)].origin);
    rest.insert(inst.commodities[static_cast<size_t>(k)].destination);
  }
  CHECK(rest.size() > 3);
}

TEST_CASE("unsatisfiable specs are rejected up front") {
  GenSpec ok;
  ok.num_nodes = 6;
  ok.num_arcs = 12;
  ok.num_commodities = 3;
  CHECK_NOTHROW(generate(ok));

  GenSpec bad = ok;
  bad.num_arcs = 31;  // above 6*5 ordered pairs
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.num_arcs = 5;  // below the strong-connectivity minimum
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.cost_min = 0.0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.cost_min = 3000.0;  // above cost_p90
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.demand_min = 0.0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.demand_min = 30.0;  // above demand_max
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.hub_fraction = 1.5;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.distance_decay = -1.0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = ok;
  bad.capacity_headroom = 0.9;  // would undercut the certificate routing
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  // hub commodities requested while the hub set rounds to fewer than two
  bad = ok;
  bad.hub_fraction = 0.0;
  bad.hub_commodity_fraction = 0.5;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("degree follows directly from the arc budget") {
  const Instance inst = generate(a1_spec(1)).instance;
  double total_out = 0.0;
  for (NodeId n = 0; n < inst.network.num_nodes(); ++n)
    total_out += static_cast<double>(inst.network.out_arcs(n).size());
  CHECK(total_out == 90.0);
  CHECK(total_out / 30.0 == 3.0);  // mean total degree 6, half of it outgoing
}
