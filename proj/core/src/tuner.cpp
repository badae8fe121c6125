#include "odimcf/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "odimcf/rng.hpp"
#include "odimcf/solver.hpp"

namespace odimcf {

namespace {

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("tune: " + msg);
}

std::array<TunerRange, 3> default_ranges(const TunerConfig& config) {
  double log_cap = 0.0, log_cost = 0.0;
  std::int64_t caps = 0, costs = 0;
  for (const BenchmarkEntry& entry : config.benchmark) {
    for (const Arc& a : entry.instance->network.arcs()) {
      log_cap += std::log(a.capacity);
      ++caps;
      if (a.cost > 0.0) {
        log_cost += std::log(a.cost);
        ++costs;
      }
    }
  }
  check(caps > 0 && costs > 0, "benchmark instances must have arcs with positive costs");
  const double gm_cap = std::exp(log_cap / static_cast<double>(caps));
  const double gm_cost = std::exp(log_cost / static_cast<double>(costs));
  return {TunerRange{0.01 * gm_cap, 100.0 * gm_cap},
          TunerRange{0.01 * gm_cost, 100.0 * gm_cost}, TunerRange{1.0, 30.0}};
}

class FitnessEvaluator {
 public:
  explicit FitnessEvaluator(const TunerConfig& config) : config_(&config) {}

  double evaluate(const TunerMember& member) {
    double sum = 0.0;
    std::int64_t runs = 0;
    for (const BenchmarkEntry& entry : config_->benchmark) {
      for (std::int32_t seed = 0; seed < config_->seeds_per_eval; ++seed) {
        SolveConfig sc;
        sc.params = member_params(*entry.instance, member);
        sc.seed = static_cast<std::uint64_t>(seed);
        const SolveReport report = solve(*entry.instance, sc);
        if (report.feasible) {
          const double normalized = report.total_cost / entry.reference_cost;
          pending_worst_ = std::max(pending_worst_, normalized);
          sum += normalized;
        } else {
          sum += 10.0 * worst_feasible_;
        }
        ++runs;
      }
    }
    return sum / static_cast<double>(runs);
  }

  // Generation barrier: feasible costs seen since the last commit start
  // feeding the infeasibility penalty.
  void commit() { worst_feasible_ = std::max(worst_feasible_, pending_worst_); }

 private:
  const TunerConfig* config_;
  double worst_feasible_ = 1.0;
  double pending_worst_ = 1.0;
};

}  // namespace

IhhParams member_params(const Instance& instance, const TunerMember& member) {
  IhhParams params = default_params(instance);
  params.beta = member[0];
  params.mu = member[1];
  params.pi = member[2];
  return params;
}

double fitness(const TunerMember& member, const TunerConfig& config) {
  check(!config.benchmark.empty(), "benchmark must not be empty");
  FitnessEvaluator evaluator(config);
  return evaluator.evaluate(member);
}

TuneResult tune(const TunerConfig& config) {
  check(!config.benchmark.empty(), "benchmark must not be empty");
  for (const BenchmarkEntry& entry : config.benchmark) {
    check(entry.instance != nullptr, "benchmark entry without instance");
    check(entry.reference_cost > 0.0, "benchmark reference cost must be > 0");
  }
  check(config.population_size >= 4, "population_size must be >= 4");
  check(config.generations >= 0, "generations must be >= 0");
  check(config.seeds_per_eval >= 1, "seeds_per_eval must be >= 1");
  check(config.de_weight > 0.0, "de_weight must be > 0");
  check(config.de_crossover >= 0.0 && config.de_crossover <= 1.0,
        "de_crossover must lie in [0, 1]");

  const std::array<TunerRange, 3> ranges =
      config.ranges ? *config.ranges : default_ranges(config);
  for (const TunerRange& r : ranges) check(r.lo < r.hi, "range must have lo < hi");
  const auto clamp_dim = [&](double v, size_t dim) {
    return std::clamp(v, ranges[dim].lo, ranges[dim].hi);
  };

  Rng rng(config.seed);
  FitnessEvaluator evaluator(config);
  const auto pop_size = static_cast<size_t>(config.population_size);

  std::vector<TunerMember> population(pop_size);
  {
    const IhhParams defaults = default_params(*config.benchmark.front().instance);
    population[0] = {clamp_dim(defaults.beta, 0), clamp_dim(defaults.mu, 1),
                     clamp_dim(defaults.pi, 2)};
  }
  for (size_t i = 1; i < pop_size; ++i)
    for (size_t dim = 0; dim < 3; ++dim)
      population[i][dim] = rng.uniform(ranges[dim].lo, ranges[dim].hi);

  std::vector<double> scores(pop_size);
  for (size_t i = 0; i < pop_size; ++i) scores[i] = evaluator.evaluate(population[i]);
  evaluator.commit();

  TuneResult result;
  const auto record_best = [&] {
    const size_t best = static_cast<size_t>(
        std::min_element(scores.begin(), scores.end()) - scores.begin());
    result.trace.push_back(scores[best]);
    result.best_member = population[best];
    result.best_fitness = scores[best];
  };
  record_best();

  std::vector<TunerMember> trials(pop_size);
  std::vector<double> trial_scores(pop_size);
  for (std::int32_t gen = 0; gen < config.generations; ++gen) {
    for (size_t i = 0; i < pop_size; ++i) {
      size_t r1, r2, r3;
      do r1 = static_cast<size_t>(rng.bounded(pop_size)); while (r1 == i);
      do r2 = static_cast<size_t>(rng.bounded(pop_size)); while (r2 == i || r2 == r1);
      do {
        r3 = static_cast<size_t>(rng.bounded(pop_size));
      } while (r3 == i || r3 == r1 || r3 == r2);

      const size_t forced = static_cast<size_t>(rng.bounded(3));
      TunerMember trial = population[i];
      for (size_t dim = 0; dim < 3; ++dim) {
        const bool cross = rng.uniform01() < config.de_crossover || dim == forced;
        if (cross) {
          trial[dim] = clamp_dim(
              population[r1][dim] +
                  config.de_weight * (population[r2][dim] - population[r3][dim]),
              dim);
        }
      }
      trials[i] = trial;
      trial_scores[i] = evaluator.evaluate(trial);
    }
    // Generation barrier: elitist one-to-one replacement.
    for (size_t i = 0; i < pop_size; ++i) {
      if (trial_scores[i] < scores[i]) {
        population[i] = trials[i];
        scores[i] = trial_scores[i];
      }
    }
    evaluator.commit();
    record_best();
  }
  return result;
}

}  // namespace odimcf
