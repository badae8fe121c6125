#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "odimcf/model.hpp"

namespace odimcf {

// Thrown when an instance is beyond what exhaustive search will attempt.
class OracleLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  // Simple paths enumerated per commodity before giving up.
  std::uint64_t max_paths_per_commodity = 10000;
  std::int32_t max_commodities = 12;
  // Branch-and-bound nodes visited before giving up.
  std::uint64_t max_nodes_explored = 50'000'000;
};

struct OracleResult {
  // Unset when no capacity-feasible routing of all commodities exists.
  std::optional<double> optimal_cost;
  std::vector<Route> optimal_routes;
  std::uint64_t nodes_explored = 0;
};

// Proven optimum by enumerating every simple path per commodity and searching
// all combinations, pruning on capacity and on a cheapest-completion bound.
// The cost is deterministic and independent of commodity order; among
// equal-cost optima the first found is kept. Throws OracleLimitError when a
// limit is exceeded.
OracleResult exact_solve(const Instance& instance, const OracleLimits& limits = {});

// Capacity-free bound: sum over commodities of demand * cheapest-path cost.
// +infinity if some commodity cannot reach its destination at all.
double lower_bound(const Instance& instance);

}  // namespace odimcf
