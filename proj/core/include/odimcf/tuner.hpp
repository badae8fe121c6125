#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "odimcf/model.hpp"
#include "odimcf/pricing.hpp"

namespace odimcf {

// A candidate point in the (beta, mu, pi) search space.
using TunerMember = std::array<double, 3>;

struct TunerRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct BenchmarkEntry {
  const Instance* instance = nullptr;
  // Cost to normalize against (a known optimum or bound). Must be > 0.
  double reference_cost = 0.0;
};

struct TunerConfig {
  std::vector<BenchmarkEntry> benchmark;
  std::int32_t population_size = 30;
  std::int32_t generations = 100;
  // Every member is scored on solver seeds 0 .. seeds_per_eval-1.
  std::int32_t seeds_per_eval = 1;
  double de_weight = 0.5;     // F
  double de_crossover = 0.9;  // CR
  std::uint64_t seed = 0;
  // Search box per dimension; unset derives
  //   beta in [0.01, 100] * geomean(capacities pooled over the benchmark)
  //   mu   in [0.01, 100] * geomean(positive costs pooled over the benchmark)
  //   pi   in [1, 30]
  std::optional<std::array<TunerRange, 3>> ranges;
};

struct TuneResult {
  TunerMember best_member{};
  double best_fitness = 0.0;
  // trace[0] is the best fitness of the initial population, then one entry
  // per generation after replacement; nonincreasing throughout.
  std::vector<double> trace;
};

// Instance defaults with beta/mu/pi replaced by the member's values.
IhhParams member_params(const Instance& instance, const TunerMember& member);

// Mean over (benchmark entry, seed) of solver cost / reference cost. An
// infeasible run contributes a 10x-the-worst-feasible-normalized-cost penalty
// (at least 10) so the landscape stays ordered without infinities.
double fitness(const TunerMember& member, const TunerConfig& config);

// DE/rand/1/bin search over (beta, mu, pi). The initial population is the
// benchmark-derived defaults plus uniform random members; a trial replaces
// its target only on strictly better fitness. Deterministic given the config.
TuneResult tune(const TunerConfig& config);

}  // namespace odimcf
