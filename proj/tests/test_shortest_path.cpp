#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "odimcf/rng.hpp"
#include "odimcf/shortest_path.hpp"
#include "test_util.hpp"

using namespace odimcf;

namespace {

// two parallel 0 -> 3 corridors: cost 10 through node 1, cost 9 through node 2
Network diamond() {
  return Network(4, {{0, 1, 4.0, 100.0},
                     {1, 3, 6.0, 100.0},
                     {0, 2, 4.0, 100.0},
                     {2, 3, 5.0, 100.0}});
}

}  // namespace

TEST_CASE("single arc, single choice") {
  const Network net(2, {{0, 1, 5.0, 1.0}});
  ShortestPathSolver solver(net);
  const PathResult r = solver.solve(0, 1, [&](ArcId a) { return net.arc(a).cost; });
  CHECK(r.route == Route{0});
  CHECK(r.cost == 5.0);
}

TEST_CASE("unreachable destination yields an empty route") {
  const Network net(3, {{0, 1, 5.0, 1.0}});
  ShortestPathSolver solver(net);
  const PathResult r = solver.solve(0, 2, [&](ArcId a) { return net.arc(a).cost; });
  CHECK(r.route.empty());
  CHECK(r.cost == 0.0);
}

TEST_CASE("the cheaper branch of a diamond wins") {
  const Network net = diamond();
  ShortestPathSolver solver(net);
  const PathResult r = solver.solve(0, 3, [&](ArcId a) { return net.arc(a).cost; });
  CHECK(r.cost == 9.0);
  CHECK(r.route == Route{2, 3});
}

TEST_CASE("bad oracle values are rejected") {
  const Network net(2, {{0, 1, 5.0, 1.0}});
  ShortestPathSolver solver(net);
  CHECK_THROWS_AS(solver.solve(0, 1, [](ArcId) { return -1.0; }), std::domain_error);
  CHECK_THROWS_AS(solver.solve(0, 1, [](ArcId) { return std::nan(""); }),
                  std::domain_error);
  CHECK_THROWS_AS(
      solver.solve(0, 1, [](ArcId) { return std::numeric_limits<double>::infinity(); }),
      std::domain_error);
}

TEST_CASE("one solver instance can serve many queries and cost functions") {
  const Network net = diamond();
  ShortestPathSolver solver(net);

  const PathResult cheap = solver.solve(0, 3, [&](ArcId a) { return net.arc(a).cost; });
  // flipping the price of the two branches must flip the answer
  const PathResult flipped =
      solver.solve(0, 3, [&](ArcId a) { return a < 2 ? 1.0 : 10.0; });
  const PathResult again = solver.solve(0, 3, [&](ArcId a) { return net.arc(a).cost; });

  CHECK(cheap.route == Route{2, 3});
  CHECK(flipped.route == Route{0, 1});
  CHECK(again.route == cheap.route);
  CHECK(again.cost == cheap.cost);
}

TEST_CASE("matches exhaustive enumeration on random graphs") {
  Rng rng(31);
  int reachable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<NodeId>(2 + rng.bounded(7));
    const Network net = testutil::random_network(rng, n, 0.45, 20.0, 10.0);
    ShortestPathSolver solver(net);
    const auto from = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
    auto to = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n) - 1));
    if (to >= from) ++to;

    const PathResult got =
        solver.solve(from, to, [&](ArcId a) { return net.arc(a).cost; });
    const auto want = testutil::min_cost_by_enumeration(
        net, from, to, [&](ArcId a) { return net.arc(a).cost; });

    if (!want) {
      CHECK(got.route.empty());
      continue;
    }
    ++reachable;
    CHECK(got.cost == doctest::Approx(*want).epsilon(1e-9));
    CHECK(validate_route(net, {from, to, 1.0}, got.route));
    CHECK(testutil::path_cost(got.route, [&](ArcId a) { return net.arc(a).cost; }) ==
          doctest::Approx(got.cost).epsilon(1e-9));
  }
  CHECK(reachable > 60);
}

TEST_CASE("equal costs produce a minimum-hop path") {
  Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<NodeId>(3 + rng.bounded(6));
    const Network net = testutil::random_network(rng, n, 0.4, 1.0, 10.0);
    ShortestPathSolver solver(net);
    const auto got = solver.solve(0, n - 1, [](ArcId) { return 1.0; });
    const auto want =
        testutil::min_cost_by_enumeration(net, 0, n - 1, [](ArcId) { return 1.0; });
    if (!want) {
      CHECK(got.route.empty());
    } else {
      CHECK(got.route.size() == static_cast<size_t>(*want));
    }
  }
}

TEST_CASE("sp_original routes on the raw costs") {
  const Network net = diamond();
  ShortestPathSolver solver(net);
  const PathResult r = sp_original(net, {0, 3, 5.0}, solver);
  CHECK(r.route == Route{2, 3});
  CHECK(r.cost == 9.0);

  const Network stub(2, {{1, 0, 1.0, 1.0}});
  ShortestPathSolver stub_solver(stub);
  CHECK(sp_original(stub, {0, 1, 5.0}, stub_solver).route.empty());
}

TEST_CASE("sp_market reduces to sp_original when capacity is slack everywhere") {
  const Network net = diamond();
  const Instance inst(net, {{0, 3, 1.0}, {0, 3, 1.0}});
  FlowState state(inst);
  state.set_route(1, {2, 3});
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 100.0;
  p.pi = 2.0;
  p.big_m = net.max_arc_cost() * 4;

  // residuals are 100ish against demand 1, scarcity vanishes
  const PathResult market = sp_market(state, p, 0, solver);
  const PathResult plain = sp_original(net, inst.commodities[0], solver);
  CHECK(market.route == plain.route);
  CHECK(market.cost == doctest::Approx(plain.cost).epsilon(1e-12));
}

TEST_CASE("sp_market detours around a congested arc") {
  Network net(4, {{0, 1, 1.0, 10.0},
                  {1, 3, 1.0, 10.0},
                  {0, 2, 5.0, 100.0},
                  {2, 3, 5.0, 100.0}});
  const Instance inst(net, {{0, 3, 10.0}, {0, 3, 10.0}});
  FlowState state(inst);
  state.set_route(1, {0, 1});  // the other commodity fills the cheap corridor
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 1000.0;
  p.pi = 2.0;
  p.big_m = net.max_arc_cost() * 4;

  const PathResult r = sp_market(state, p, 0, solver);
  CHECK(r.route == Route{2, 3});
}

TEST_CASE("sp_market prices the commodity's own usage out of the load") {
  // commodity 0 sits alone on the cheap corridor, exactly filling it; because
  // its own demand is excluded the corridor still prices far below the detour
  Network net(4, {{0, 1, 1.0, 10.0},
                  {1, 3, 1.0, 10.0},
                  {0, 2, 5.0, 100.0},
                  {2, 3, 5.0, 100.0}});
  const Instance inst(net, {{0, 3, 10.0}});
  FlowState state(inst);
  state.set_route(0, {0, 1});
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 1.0;
  p.pi = 2.0;
  p.big_m = net.max_arc_cost() * 4;

  const PathResult r = sp_market(state, p, 0, solver);
  CHECK(r.route == Route{0, 1});
  // residual = full capacity 10, pressure (1 + 10 - 10) / 1 = 1, price mu per arc
  CHECK(r.cost == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("sp_feasible matches sp_original when every arc can take the demand") {
  const Network net = diamond();
  const Instance inst(net, {{0, 3, 5.0}});
  FlowState state(inst);
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 1.0;
  p.pi = 1.0;
  p.big_m = net.max_arc_cost() * 4;

  const PathResult feas = sp_feasible(state, p, 0, solver);
  const PathResult plain = sp_original(net, inst.commodities[0], solver);
  CHECK(feas.route == plain.route);
  CHECK(feas.cost == doctest::Approx(plain.cost).epsilon(1e-12));
}

TEST_CASE("sp_feasible picks the only fitting path regardless of raw cost") {
  Network net(4, {{0, 1, 1.0, 5.0},
                  {1, 3, 1.0, 5.0},
                  {0, 2, 50.0, 100.0},
                  {2, 3, 50.0, 100.0}});
  const Instance inst(net, {{0, 3, 10.0}});
  FlowState state(inst);
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 1.0;
  p.pi = 1.0;
  p.big_m = net.max_arc_cost() * 4;

  const PathResult r = sp_feasible(state, p, 0, solver);
  CHECK(r.route == Route{2, 3});
  CHECK(r.cost == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("sp_feasible signals a dead end with a sentinel-sized cost") {
  Network net(4, {{0, 1, 1.0, 5.0},
                  {1, 3, 1.0, 5.0},
                  {0, 2, 50.0, 5.0},
                  {2, 3, 50.0, 100.0}});
  const Instance inst(net, {{0, 3, 10.0}});
  FlowState state(inst);
  ShortestPathSolver solver(net);

  IhhParams p;
  p.beta = 1.0;
  p.mu = 1.0;
  p.pi = 1.0;
  p.big_m = net.max_arc_cost() * 4;

  // every arc out of the origin is too small for the demand
  const PathResult r = sp_feasible(state, p, 0, solver);
  CHECK(r.cost >= p.big_m);
}

TEST_CASE("identical queries return identical answers") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Network net = testutil::random_network(rng, 8, 0.4, 10.0, 10.0);
    ShortestPathSolver a(net);
    ShortestPathSolver b(net);
    const PathResult ra = a.solve(0, 7, [&](ArcId x) { return net.arc(x).cost; });
    const PathResult rb = b.solve(0, 7, [&](ArcId x) { return net.arc(x).cost; });
    CHECK(ra.route == rb.route);
    CHECK(ra.cost == rb.cost);
  }
}

TEST_CASE("market and feasible searches agree with enumeration") {
  Rng rng(43);
  IhhParams p;
  p.beta = 2.0;
  p.mu = 30.0;
  p.pi = 2.0;

  int market_hits = 0;
  int feasible_hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<NodeId>(3 + rng.bounded(6));
    const Network net = testutil::random_network(rng, n, 0.45, 20.0, 40.0);
    p.big_m = std::max(net.max_arc_cost(), 1.0) * static_cast<double>(n);

    std::vector<Commodity> comms;
    for (int k = 0; k < 3; ++k) {
      const auto s = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
      auto t = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n) - 1));
      if (t >= s) ++t;
      comms.push_back({s, t, rng.uniform(1.0, 20.0)});
    }
    const Instance inst(net, std::move(comms));
    FlowState state(inst);
    for (CommodityId k = 1; k < 3; ++k) {
      const Commodity& c = inst.commodities[static_cast<size_t>(k)];
      const auto paths = testutil::all_simple_paths(net, c.origin, c.destination);
      if (!paths.empty()) state.set_route(k, paths[rng.bounded(paths.size())]);
    }

    ShortestPathSolver solver(net);
    const Commodity& c0 = inst.commodities[0];

    const PathResult market = sp_market(state, p, 0, solver);
    const auto market_want = testutil::min_cost_by_enumeration(
        net, c0.origin, c0.destination, [&](ArcId a) {
          return market_cost(p, net.arc(a), state.residual_capacity(a, 0), c0.demand);
        });
    if (market_want) {
      CHECK(market.cost == doctest::Approx(*market_want).epsilon(1e-9));
      ++market_hits;
    } else {
      CHECK(market.route.empty());
    }

    const PathResult feas = sp_feasible(state, p, 0, solver);
    const auto feas_want = testutil::min_cost_by_enumeration(
        net, c0.origin, c0.destination,
        [&](ArcId a) { return feasible_arc_cost(p, state, a, 0); });
    if (feas_want) {
      CHECK(feas.cost == doctest::Approx(*feas_want).epsilon(1e-9));
      ++feasible_hits;
    } else {
      CHECK(feas.route.empty());
    }
  }
  CHECK(market_hits > 40);
  CHECK(feasible_hits > 40);
}
