// Command-line front end: generate instances, solve them, run seed-sweep
// benchmarks, verify solutions, and tune solver parameters.
//
// Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
// malformed files, unsatisfiable generator specs caught mid-run), 3
// verification failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "odimcf/generator.hpp"
#include "odimcf/instance_io.hpp"
#include "odimcf/model.hpp"
#include "odimcf/oracle.hpp"
#include "odimcf/pricing.hpp"
#include "odimcf/solver.hpp"
#include "odimcf/tuner.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace odimcf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

// Thrown for bad file contents or values; mapped to kExitData in main.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- records

// One solver run flattened for the JSON-lines benchmark log.
json run_record(const std::string& instance_id, const std::string& group,
                std::uint64_t seed, const SolveReport& report, double lb,
                std::optional<double> oracle_cost) {
  std::int64_t reroutes_total = 0;
  std::int32_t max_reroutes = 0;
  for (std::int32_t r : report.counters.reroutes_per_commodity) {
    reroutes_total += r;
    max_reroutes = std::max(max_reroutes, r);
  }
  json rec{
      {"schema", 1},
      {"instance", instance_id},
      {"group", group},
      {"seed", seed},
      {"cost", report.total_cost},
      {"feasible", report.feasible},
      {"seconds", report.wall_seconds},
      {"main_loop_iterations", report.counters.main_loop_iterations},
      {"reroutes_total", reroutes_total},
      {"max_reroutes", max_reroutes},
      {"hurdle_activations", report.counters.hurdle_activations},
      {"feaspath_reroutes", report.counters.feaspath_reroutes},
      {"violated_arcs_before_feaspath", report.counters.violated_arcs_before_feaspath},
      {"violated_arcs_after_feaspath", report.counters.violated_arcs_after_feaspath},
      {"feasible_before_feaspath", report.feasible_before_feaspath},
      {"cost_before_feaspath", report.cost_before_feaspath},
  };
  if (std::isfinite(lb) && lb > 0.0)
    rec["lb_ratio"] = report.total_cost / lb;
  else
    rec["lb_ratio"] = nullptr;
  if (oracle_cost && *oracle_cost > 0.0)
    rec["oracle_ratio"] = report.total_cost / *oracle_cost;
  else
    rec["oracle_ratio"] = nullptr;
  return rec;
}

// --------------------------------------------------------------- generate

struct GenerateArgs {
  GenSpec spec;
  std::int64_t count = 1;
  std::string out_dir = ".";
  std::string prefix = "inst";
};

int cmd_generate(const GenerateArgs& args) {
  if (args.count > 0) fs::create_directories(args.out_dir);
  bool header_printed = false;
  for (std::int64_t i = 0; i < args.count; ++i) {
    GenSpec spec = args.spec;
    spec.seed = args.spec.seed + static_cast<std::uint64_t>(i);
    const GenResult result = generate(spec);
    const Instance& inst = result.instance;
    if (!header_printed) {
      std::printf("%-28s %5s %5s %5s %6s %10s %8s %8s %8s %8s\n", "file", "nodes",
                  "arcs", "comms", "degree", "cost", "demand", "capacity", "dem/cap",
                  "db/ub");
      header_printed = true;
    }

    const fs::path path = fs::path(args.out_dir) /
                          (args.prefix + "_s" + std::to_string(spec.seed) + ".odimcf");
    write_instance_file(path, inst, &result.certificate);

    double cost_sum = 0.0, cap_sum = 0.0, dem_sum = 0.0;
    for (ArcId a = 0; a < inst.network.num_arcs(); ++a) {
      cost_sum += inst.network.arc(a).cost;
      cap_sum += inst.network.arc(a).capacity;
    }
    for (const Commodity& c : inst.commodities) dem_sum += c.demand;
    const double na = static_cast<double>(inst.network.num_arcs());
    const double nk = static_cast<double>(inst.num_commodities());
    const double degree =
        2.0 * na / static_cast<double>(inst.network.num_nodes());
    std::printf("%-28s %5d %5d %5d %6.1f %10.1f %8.2f %8.2f %8.3f %8.3f\n",
                path.filename().string().c_str(), (int)inst.network.num_nodes(),
                (int)inst.network.num_arcs(), (int)inst.num_commodities(), degree,
                cost_sum / na, dem_sum / nk, cap_sum / na, dem_sum / cap_sum,
                (dem_sum / nk) / (cap_sum / na));
  }
  return kExitOk;
}

// ------------------------------------------------------------ solve/bench

// Flag values that override the instance-derived parameter defaults.
struct ParamOverrides {
  std::optional<double> beta, mu, pi, big_m;
  std::optional<std::int32_t> lambda0, lambda1;
  std::string params_file;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--beta", beta, "Scarcity scale override");
    cmd->add_option("--mu", mu, "Scarcity price override");
    cmd->add_option("--pi", pi, "Scarcity exponent override");
    cmd->add_option("--lambda0", lambda0, "Reroute hard cap override");
    cmd->add_option("--lambda1", lambda1, "Free-reroute budget override");
    cmd->add_option("--big-m", big_m, "Prohibitive arc cost override");
    cmd->add_option("--params-file", params_file,
                    "key=value file with beta/mu/pi/lambda0/lambda1/big_m");
  }

  // Defaults from the instance, then file values, then flags on top.
  IhhParams resolve(const Instance& instance) const {
    IhhParams params = default_params(instance);
    if (!params_file.empty()) apply_file(params);
    if (beta) params.beta = *beta;
    if (mu) params.mu = *mu;
    if (pi) params.pi = *pi;
    if (lambda0) params.lambda0 = *lambda0;
    if (lambda1) params.lambda1 = *lambda1;
    if (big_m) params.big_m = *big_m;
    validate_params(params);
    return params;
  }

 private:
  void apply_file(IhhParams& params) const {
    std::ifstream in(params_file);
    if (!in) throw DataError("cannot read params file: " + params_file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw DataError(params_file + ":" + std::to_string(lineno) +
                        ": expected key=value");
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      try {
        if (key == "beta")
          params.beta = std::stod(value);
        else if (key == "mu")
          params.mu = std::stod(value);
        else if (key == "pi")
          params.pi = std::stod(value);
        else if (key == "lambda0")
          params.lambda0 = std::stoi(value);
        else if (key == "lambda1")
          params.lambda1 = std::stoi(value);
        else if (key == "big_m")
          params.big_m = std::stod(value);
        else
          throw DataError(params_file + ":" + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
      } catch (const std::invalid_argument&) {
        throw DataError(params_file + ":" + std::to_string(lineno) +
                        ": bad number '" + value + "'");
      }
    }
  }
};

struct SolveArgs {
  std::string instance_path;
  std::string out_path;
  std::string group;
  std::uint64_t seed = 0;
  ParamOverrides overrides;
};

int cmd_solve(const SolveArgs& args) {
  const LoadedInstance loaded = read_instance_file(args.instance_path);
  const Instance& inst = loaded.instance;

  SolveConfig config;
  config.params = args.overrides.resolve(inst);
  config.seed = args.seed;
  const SolveReport report = solve(inst, config);

  fs::path out = args.out_path.empty()
                     ? fs::path(args.instance_path).replace_extension(".sol")
                     : fs::path(args.out_path);
  Solution solution{report.state.routes(), report.total_cost};
  write_solution_file(out, solution);

  const std::string id = fs::path(args.instance_path).stem().string();
  std::cout << run_record(id, args.group, args.seed, report, lower_bound(inst),
                          std::nullopt)
                   .dump()
            << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> instance_paths;
  std::vector<std::uint64_t> seeds;
  std::string group;
  std::string records_path;
  std::string csv_path;
  std::int64_t jobs = 0;
  bool with_oracle = false;
  ParamOverrides overrides;
};

struct BenchAggregate {
  std::string instance_id;
  std::int64_t runs = 0, feasible_runs = 0;
  double cost_mean = 0, cost_best = 0, cost_worst = 0, cost_cv = 0;
  double sec_mean = 0, sec_best = 0, sec_worst = 0;
  double lb_ratio_mean = 0;
  std::optional<double> oracle_ratio_mean;
};

int cmd_bench(const BenchArgs& args) {
  if (args.instance_paths.empty()) throw DataError("no instances given");

  // Canonical order: instances sorted by path, seeds ascending.
  std::vector<std::string> paths = args.instance_paths;
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  std::vector<std::uint64_t> seeds = args.seeds;
  if (seeds.empty())
    for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(s);
  std::sort(seeds.begin(), seeds.end());

  struct Prepared {
    std::string id;
    LoadedInstance loaded;
    IhhParams params;
    double lb = 0.0;
    std::optional<double> oracle_cost;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(paths.size());
  for (const std::string& path : paths) {
    Prepared p{fs::path(path).stem().string(), read_instance_file(path), {}, 0.0, {}};
    p.params = args.overrides.resolve(p.loaded.instance);
    p.lb = lower_bound(p.loaded.instance);
    if (args.with_oracle) {
      try {
        p.oracle_cost = exact_solve(p.loaded.instance).optimal_cost;
      } catch (const OracleLimitError&) {
        // too large to prove; the ratio column just stays empty
      }
    }
    prepared.push_back(std::move(p));
  }

  struct Job {
    std::size_t inst_index;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < prepared.size(); ++i)
    for (std::uint64_t s : seeds) jobs.push_back({i, s});

  std::vector<SolveReport> reports(jobs.size(), SolveReport(FlowState(
                                                    prepared[0].loaded.instance)));
  const std::int64_t hw = static_cast<std::int64_t>(std::thread::hardware_concurrency());
  const std::int64_t nthreads =
      std::clamp<std::int64_t>(args.jobs > 0 ? args.jobs : hw, 1,
                               static_cast<std::int64_t>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      SolveConfig config;
      config.params = prepared[jobs[j].inst_index].params;
      config.seed = jobs[j].seed;
      reports[j] = solve(prepared[jobs[j].inst_index].loaded.instance, config);
    }
  };
  std::vector<std::thread> pool;
  for (std::int64_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // Per-run records, already in (instance, seed) order.
  std::ofstream records_file;
  std::ostream* records = &std::cout;
  if (!args.records_path.empty()) {
    records_file.open(args.records_path);
    if (!records_file) throw DataError("cannot write " + args.records_path);
    records = &records_file;
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Prepared& p = prepared[jobs[j].inst_index];
    *records << run_record(p.id, args.group, jobs[j].seed, reports[j], p.lb,
                           p.oracle_cost)
                    .dump()
             << "\n";
  }

  // Aggregate per instance over its seed sweep.
  std::vector<BenchAggregate> aggregates;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    BenchAggregate agg;
    agg.instance_id = prepared[i].id;
    std::vector<double> costs, secs;
    double lb_ratio_sum = 0.0, oracle_ratio_sum = 0.0;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].inst_index != i) continue;
      ++agg.runs;
      if (reports[j].feasible) ++agg.feasible_runs;
      costs.push_back(reports[j].total_cost);
      secs.push_back(reports[j].wall_seconds);
      lb_ratio_sum += reports[j].total_cost / prepared[i].lb;
      if (prepared[i].oracle_cost)
        oracle_ratio_sum += reports[j].total_cost / *prepared[i].oracle_cost;
    }
    const double n = static_cast<double>(agg.runs);
    agg.cost_mean = std::accumulate(costs.begin(), costs.end(), 0.0) / n;
    agg.cost_best = *std::min_element(costs.begin(), costs.end());
    agg.cost_worst = *std::max_element(costs.begin(), costs.end());
    double var = 0.0;
    for (double c : costs) var += (c - agg.cost_mean) * (c - agg.cost_mean);
    agg.cost_cv = agg.cost_mean > 0.0 ? std::sqrt(var / n) / agg.cost_mean : 0.0;
    agg.sec_mean = std::accumulate(secs.begin(), secs.end(), 0.0) / n;
    agg.sec_best = *std::min_element(secs.begin(), secs.end());
    agg.sec_worst = *std::max_element(secs.begin(), secs.end());
    agg.lb_ratio_mean = lb_ratio_sum / n;
    if (prepared[i].oracle_cost) agg.oracle_ratio_mean = oracle_ratio_sum / n;
    aggregates.push_back(agg);
  }

  std::ofstream csv_file;
  std::ostream* csv = &std::cout;
  if (!args.csv_path.empty()) {
    csv_file.open(args.csv_path);
    if (!csv_file) throw DataError("cannot write " + args.csv_path);
    csv = &csv_file;
  }
  *csv << "instance,runs,feasible,cost_mean,cost_best,cost_worst,cost_cv,"
          "seconds_mean,seconds_best,seconds_worst,lb_ratio_mean,oracle_ratio_mean\n";
  for (const BenchAggregate& a : aggregates) {
    char line[512];
    std::snprintf(line, sizeof line,
                  "%s,%lld,%lld,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,",
                  a.instance_id.c_str(), (long long)a.runs, (long long)a.feasible_runs,
                  a.cost_mean, a.cost_best, a.cost_worst, a.cost_cv, a.sec_mean,
                  a.sec_best, a.sec_worst, a.lb_ratio_mean);
    *csv << line;
    if (a.oracle_ratio_mean) {
      std::snprintf(line, sizeof line, "%.6f", *a.oracle_ratio_mean);
      *csv << line;
    }
    *csv << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string instance_path;
  std::string solution_path;
  bool certificate = false;
};

int cmd_verify(const VerifyArgs& args) {
  const LoadedInstance loaded = read_instance_file(args.instance_path);
  const Instance& inst = loaded.instance;

  std::vector<Route> routes;
  std::optional<double> stated_cost;
  if (args.certificate) {
    if (!loaded.certificate)
      throw DataError(args.instance_path + " carries no certificate");
    routes = *loaded.certificate;
  } else {
    const Solution solution = read_solution_file(args.solution_path);
    routes = solution.routes;
    stated_cost = solution.total_cost;
  }

  if (routes.size() != static_cast<std::size_t>(inst.num_commodities()))
    throw DataError("solution has " + std::to_string(routes.size()) +
                    " routes for " + std::to_string(inst.num_commodities()) +
                    " commodities");

  FlowState state(inst);
  for (CommodityId k = 0; k < inst.num_commodities(); ++k) {
    const Route& route = routes[static_cast<std::size_t>(k)];
    if (route.empty()) {
      std::cout << "FAIL commodity " << k << ": unrouted\n";
      return kExitVerify;
    }
    if (!validate_route(inst.network, inst.commodities[static_cast<std::size_t>(k)],
                        route)) {
      std::cout << "FAIL commodity " << k << ": route is not a simple "
                << "origin-to-destination path\n";
      return kExitVerify;
    }
    state.set_route(k, route);
  }

  for (ArcId a = 0; a < inst.network.num_arcs(); ++a) {
    const double cap = inst.network.arc(a).capacity;
    if (state.arc_load(a) > cap * (1.0 + kCapacityTolerance)) {
      std::cout << "FAIL arc " << a << ": load " << state.arc_load(a)
                << " exceeds capacity " << cap << "\n";
      return kExitVerify;
    }
  }

  const double cost = total_cost(state);
  if (stated_cost) {
    const double err = std::abs(cost - *stated_cost);
    if (err > 1e-6 * std::max(1.0, std::abs(cost))) {
      std::cout << "FAIL cost: stated " << *stated_cost << ", recomputed " << cost
                << "\n";
      return kExitVerify;
    }
  }
  std::cout << "ok: " << inst.num_commodities() << " commodities routed, cost "
            << cost << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------- tune

struct TuneArgs {
  std::string benchmark_path;
  TunerConfig config;
  std::vector<double> range_flags;  // beta_lo beta_hi mu_lo mu_hi pi_lo pi_hi
};

int cmd_tune(const TuneArgs& args) {
  // Benchmark file: one instance path per line, optional reference cost after
  // it. Without a reference the capacity-free lower bound is used.
  std::ifstream in(args.benchmark_path);
  if (!in) throw DataError("cannot read benchmark file: " + args.benchmark_path);

  std::vector<LoadedInstance> instances;
  std::vector<std::optional<double>> refs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string path;
    if (!(fields >> path)) continue;
    double ref = 0.0;
    std::optional<double> ref_opt;
    if (fields >> ref) {
      if (ref <= 0.0)
        throw DataError(args.benchmark_path + ":" + std::to_string(lineno) +
                        ": reference cost must be positive");
      ref_opt = ref;
    }
    const fs::path resolved = fs::path(path).is_absolute()
                                  ? fs::path(path)
                                  : fs::path(args.benchmark_path).parent_path() / path;
    instances.push_back(read_instance_file(resolved));
    refs.push_back(ref_opt);
  }
  if (instances.empty())
    throw DataError(args.benchmark_path + ": no instances listed");

  TunerConfig config = args.config;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const double ref = refs[i] ? *refs[i] : lower_bound(instances[i].instance);
    if (!std::isfinite(ref) || ref <= 0.0)
      throw DataError("instance " + std::to_string(i) +
                      " has no finite lower bound; give an explicit reference");
    config.benchmark.push_back({&instances[i].instance, ref});
  }
  if (!args.range_flags.empty()) {
    config.ranges = std::array<TunerRange, 3>{
        TunerRange{args.range_flags[0], args.range_flags[1]},
        TunerRange{args.range_flags[2], args.range_flags[3]},
        TunerRange{args.range_flags[4], args.range_flags[5]}};
  }

  const TuneResult result = tune(config);
  json out{{"schema", 1},
           {"beta", result.best_member[0]},
           {"mu", result.best_member[1]},
           {"pi", result.best_member[2]},
           {"fitness", result.best_fitness},
           {"trace", result.trace}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"origin-destination integer multicommodity flow toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "Generate random instances");
  gen->add_option("--nodes", gen_args.spec.num_nodes, "Node count")->required();
  gen->add_option("--arcs", gen_args.spec.num_arcs, "Arc count")->required();
  gen->add_option("--commodities", gen_args.spec.num_commodities, "Commodity count")
      ->required();
  gen->add_option("--cost-min", gen_args.spec.cost_min, "Smallest arc cost");
  gen->add_option("--cost-p90", gen_args.spec.cost_p90, "90th percentile arc cost");
  gen->add_option("--demand-min", gen_args.spec.demand_min, "Smallest demand");
  gen->add_option("--demand-max", gen_args.spec.demand_max, "Largest demand");
  gen->add_option("--hub-fraction", gen_args.spec.hub_fraction,
                  "Fraction of nodes made hubs");
  gen->add_option("--hub-commodities", gen_args.spec.hub_commodity_fraction,
                  "Fraction of commodities forced hub-to-hub");
  gen->add_option("--decay", gen_args.spec.distance_decay,
                  "Arc sampling distance decay");
  gen->add_option("--headroom", gen_args.spec.capacity_headroom,
                  "Capacity over certificate load, >= 1");
  gen->add_option("--seed", gen_args.spec.seed, "Seed of the first instance");
  gen->add_option("--count", gen_args.count, "How many instances (seed increments)");
  gen->add_option("--out", gen_args.out_dir, "Output directory");
  gen->add_option("--prefix", gen_args.prefix, "Output file name prefix");

  SolveArgs solve_args;
  CLI::App* slv = app.add_subcommand("solve", "Solve one instance");
  slv->add_option("instance", solve_args.instance_path, "Instance file")->required();
  slv->add_option("--seed", solve_args.seed, "Random seed (default 0)");
  slv->add_option("--out", solve_args.out_path,
                  "Solution file (default: instance with .sol extension)");
  slv->add_option("--group", solve_args.group, "Label copied into the record");
  solve_args.overrides.add_flags(slv);

  BenchArgs bench_args;
  CLI::App* bn = app.add_subcommand("bench", "Seed-sweep benchmark over instances");
  bn->add_option("instances", bench_args.instance_paths, "Instance files")
      ->required();
  bn->add_option("--seeds", bench_args.seeds, "Seeds to sweep (default 0..9)");
  bn->add_option("--jobs", bench_args.jobs, "Worker threads (default: hardware)");
  bn->add_option("--group", bench_args.group, "Label copied into the records");
  bn->add_option("--records", bench_args.records_path,
                 "Write per-run JSON lines here instead of stdout");
  bn->add_option("--csv", bench_args.csv_path,
                 "Write the aggregate CSV here instead of stdout");
  bn->add_flag("--oracle", bench_args.with_oracle,
               "Also compute exact optima (small instances only)");
  bench_args.overrides.add_flags(bn);

  VerifyArgs verify_args;
  CLI::App* ver = app.add_subcommand("verify", "Check a solution against an instance");
  ver->add_option("instance", verify_args.instance_path, "Instance file")->required();
  CLI::Option* sol_opt =
      ver->add_option("solution", verify_args.solution_path, "Solution file");
  ver->add_flag("--certificate", verify_args.certificate,
                "Verify the certificate embedded in the instance")
      ->excludes(sol_opt);

  TuneArgs tune_args;
  CLI::App* tn = app.add_subcommand("tune", "Search beta/mu/pi by differential evolution");
  tn->add_option("benchmark", tune_args.benchmark_path,
                 "File of instance paths with optional reference costs")
      ->required();
  tn->add_option("--population", tune_args.config.population_size, "Population size");
  tn->add_option("--generations", tune_args.config.generations, "Generations");
  tn->add_option("--seeds-per-eval", tune_args.config.seeds_per_eval,
                 "Solver seeds per fitness evaluation");
  tn->add_option("--de-weight", tune_args.config.de_weight, "Differential weight F");
  tn->add_option("--de-crossover", tune_args.config.de_crossover, "Crossover rate CR");
  tn->add_option("--seed", tune_args.config.seed, "Tuner seed");
  tn->add_option("--ranges", tune_args.range_flags,
                 "Search box: beta_lo beta_hi mu_lo mu_hi pi_lo pi_hi")
      ->expected(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_args);
    if (slv->parsed()) return cmd_solve(solve_args);
    if (bn->parsed()) return cmd_bench(bench_args);
    if (ver->parsed()) {
      if (!verify_args.certificate && verify_args.solution_path.empty()) {
        std::cerr << "verify: give a solution file or --certificate\n";
        return kExitUsage;
      }
      return cmd_verify(verify_args);
    }
    if (tn->parsed()) return cmd_tune(tune_args);
  } catch (const std::invalid_argument& e) {
    // bad spec or parameter values: caller input, not file contents
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
