// Copyright 2026 The stcvrp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "stcvrp/brute_force.h"
#include "stcvrp/error.h"
#include "stcvrp/ga.h"
#include "stcvrp/generator.h"
#include "stcvrp/import.h"
#include "stcvrp/instance_io.h"
#include "stcvrp/json_io.h"
#include "stcvrp/milp.h"
#include "stcvrp/naming.h"
#include "stcvrp/simulator.h"
#include "stcvrp/validate.h"
#include "stcvrp/version.h"

namespace stcvrp::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

// <dir>/<stem>.manifest.json next to the primary artifact.
fs::path ManifestPathFor(const fs::path& artifact) {
  fs::path manifest = artifact;
  manifest.replace_extension(".manifest.json");
  return manifest;
}

void WriteManifest(const fs::path& artifact, const std::string& command,
                   const std::string& instance_path, const json& seeds,
                   const json& config, const std::vector<fs::path>& outputs,
                   double wall_clock_s) {
  json paths = json::array();
  for (const fs::path& p : outputs) paths.push_back(p.string());
  const json manifest = {
      {"command", command},
      {"instance", instance_path},
      {"seeds", seeds},
      {"config", config},
      {"outputs", paths},
      {"wall_clock_s", wall_clock_s},
      {"version", STCVRP_VERSION},
  };
  WriteTextFile(ManifestPathFor(artifact), Dump(manifest));
}

json ParseJsonFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

json ConfigToJson(const GaConfig& c) {
  return {{"population_size", c.population_size},
          {"crossover_rate", c.crossover_rate},
          {"mutation_rate", c.mutation_rate},
          {"elite_count", c.elite_count},
          {"tournament_size", c.tournament_size},
          {"stagnation_limit", c.stagnation_limit},
          {"max_generations", c.max_generations},
          {"mutation_mix", c.mutation_mix},
          {"threads", c.threads}};
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string pattern;
  int n = 0;
  int k = 0;
  double d_max = 0.0;
  double sigma = 4.0;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string from;
};

int Generate(const GenerateArgs& a, CLI::App& cmd, std::ostream& out) {
  const auto start = Clock::now();
  GeneratorSpec spec;
  spec.pattern = ParsePattern(a.pattern);
  spec.k_max = a.k;
  spec.d_max = a.d_max;
  spec.noise_sigma = a.sigma;
  spec.seed = a.seed;

  std::optional<Instance> instance;
  std::string comment;
  if (!a.from.empty()) {
    const ImportedCoordinates coords = ImportCoordinates(ReadTextFile(a.from));
    const std::vector<Point> tasks = coords.Tasks();
    if (cmd.count("--n") > 0 && a.n != static_cast<int>(tasks.size())) {
      throw Error(ErrorKind::kInvalidParameter,
                  "--n " + std::to_string(a.n) + " but " + a.from + " has " +
                      std::to_string(tasks.size()) + " tasks");
    }
    spec.n_tasks = static_cast<int>(tasks.size());
    ValidateSpec(spec);
    instance.emplace(BuildInstance(tasks, spec));
    comment = "imported from " + fs::path(a.from).filename().string() +
              " (" + (coords.format == CoordinateFormat::kSolomon ? "solomon"
                                                                 : "tsplib") +
              ")";
  } else {
    if (cmd.count("--n") == 0) {
      throw Error(ErrorKind::kInvalidParameter, "--n is required");
    }
    spec.n_tasks = a.n;
    instance.emplace(stcvrp::Generate(spec));
    comment = GeneratorComment(spec);
  }

  fs::create_directories(a.out);
  const fs::path path = fs::path(a.out) / (instance->name() + ".stcvrp");
  WriteTextFile(path, FormatInstance(*instance, comment));
  const json config = {{"pattern", PatternWord(spec.pattern)},
                       {"n", spec.n_tasks},
                       {"k", spec.k_max},
                       {"dmax", spec.d_max},
                       {"sigma", spec.noise_sigma},
                       {"from", a.from}};
  WriteManifest(path, "generate", path.string(), json::array({a.seed}), config,
                {path}, SecondsSince(start));
  out << path.string() << "\n";
  return kExitOk;
}

// --- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::uint64_t seed = 1;
  int runs = 1;
  std::optional<int> population;
  std::optional<int> elites;
  std::optional<double> crossover;
  std::optional<double> mutation;
  std::optional<int> tournament;
  std::optional<int> stagnation;
  std::optional<int> max_generations;
  std::optional<double> mix;
  int threads = 1;
  int jobs = 1;
  std::string out = ".";
  bool no_timing = false;
};

int Solve(const SolveArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Instance instance = ReadInstanceFile(a.instance);
  if (a.runs < 1) throw Error(ErrorKind::kInvalidParameter, "--runs must be >= 1");
  if (a.jobs < 1) throw Error(ErrorKind::kInvalidParameter, "--jobs must be >= 1");

  GaConfig base = DefaultGaConfig(instance.num_tasks());
  if (a.population) base.population_size = *a.population;
  if (a.elites) base.elite_count = *a.elites;
  if (a.crossover) base.crossover_rate = *a.crossover;
  if (a.mutation) base.mutation_rate = *a.mutation;
  if (a.tournament) base.tournament_size = *a.tournament;
  if (a.stagnation) base.stagnation_limit = *a.stagnation;
  if (a.max_generations) base.max_generations = *a.max_generations;
  if (a.mix) base.mutation_mix = *a.mix;
  base.threads = a.threads;
  ValidateConfig(base);

  const auto runs = static_cast<std::size_t>(a.runs);
  std::vector<GaResult> results(runs);
  std::vector<std::exception_ptr> failures(runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        GaConfig config = base;
        config.seed = a.seed + r;
        results[r] = stcvrp::Solve(instance, config);
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int workers = std::min<int>(a.jobs, a.runs);
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  fs::create_directories(a.out);
  const std::string name = instance.name();
  std::vector<fs::path> outputs;
  json run_rows = json::array();
  json seeds = json::array();
  std::size_t best_run = 0;
  for (std::size_t r = 0; r < runs; ++r) {
    GaResult& result = results[r];
    if (a.no_timing) {
      result.wall_seconds = 0.0;
      for (GenerationRecord& rec : result.log) rec.elapsed_s = 0.0;
    }
    const std::uint64_t seed = a.seed + r;
    const fs::path csv =
        fs::path(a.out) / (name + "_seed" + std::to_string(seed) + "_convergence.csv");
    WriteTextFile(csv, ConvergenceCsv(result));
    outputs.push_back(csv);
    const Schedule schedule = Evaluate(instance, result.best);
    run_rows.push_back({{"seed", seed},
                        {"best_makespan", result.best_makespan},
                        {"initial_best", result.initial_best},
                        {"total_wait", schedule.total_wait},
                        {"generations", result.generations},
                        {"evaluations", result.evaluations},
                        {"elapsed_s", result.wall_seconds},
                        {"solution", SolutionToJson(result.best)},
                        {"convergence_csv", csv.filename().string()}});
    seeds.push_back(seed);
    if (result.best_makespan < results[best_run].best_makespan) best_run = r;
  }

  double sum = 0.0;
  double time_sum = 0.0;
  double worst = results[0].best_makespan;
  for (const GaResult& r : results) {
    sum += r.best_makespan;
    time_sum += r.wall_seconds;
    worst = std::max(worst, r.best_makespan);
  }
  const double mean = sum / static_cast<double>(runs);
  double sq = 0.0;
  for (const GaResult& r : results) sq += (r.best_makespan - mean) * (r.best_makespan - mean);
  const double stddev = runs > 1 ? std::sqrt(sq / static_cast<double>(runs - 1)) : 0.0;

  const json aggregate = {
      {"runs", a.runs},
      {"best", results[best_run].best_makespan},
      {"worst", worst},
      {"mean", mean},
      {"std", stddev},
      {"t_avg", time_sum / static_cast<double>(runs)},
      {"T_W", run_rows[best_run]["total_wait"]},
      {"best_seed", a.seed + best_run},
  };
  const json doc = {{"instance", name},
                    {"num_tasks", instance.num_tasks()},
                    {"num_vehicles", instance.num_vehicles()},
                    {"d_max", instance.d_max()},
                    {"config", ConfigToJson(base)},
                    {"runs", run_rows},
                    {"aggregate", aggregate}};
  const fs::path results_path = fs::path(a.out) / (name + "_results.json");
  WriteTextFile(results_path, Dump(doc));
  outputs.insert(outputs.begin(), results_path);
  WriteManifest(results_path, "solve", a.instance, seeds, ConfigToJson(base),
                outputs, a.no_timing ? 0.0 : SecondsSince(start));
  out << Dump(aggregate);
  return kExitOk;
}

// --- evaluate / validate ---------------------------------------------------

int EvaluateCmd(const std::string& instance_path,
                const std::string& solution_path, const std::string& out_path,
                std::ostream& out) {
  const auto start = Clock::now();
  const Instance instance = ReadInstanceFile(instance_path);
  const Solution solution = SolutionFromJson(ParseJsonFile(solution_path));
  CheckPartition(solution, instance);
  json doc = ScheduleToJson(Evaluate(instance, solution));
  doc["routes"] = SolutionToJson(solution)["routes"];
  if (!out_path.empty()) {
    WriteTextFile(out_path, Dump(doc));
    WriteManifest(out_path, "evaluate", instance_path, json::array(),
                  {{"solution", solution_path}}, {fs::path(out_path)},
                  SecondsSince(start));
  }
  out << Dump(doc);
  return kExitOk;
}

int ValidateCmd(const std::string& instance_path,
                const std::string& solution_path,
                const std::string& schedule_path, std::ostream& out) {
  const Instance instance = ReadInstanceFile(instance_path);
  const Solution solution = SolutionFromJson(ParseJsonFile(solution_path));
  const Schedule schedule =
      schedule_path.empty()
          ? Evaluate(instance, solution)
          : ScheduleFromJson(ParseJsonFile(schedule_path), instance);
  const ViolationReport report = ValidateSchedule(instance, solution, schedule);
  for (const Violation& v : report.violations) out << Describe(v) << "\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
  out << (report.feasible() ? "feasible" : "infeasible") << " ("
      << report.violations.size() << " violations)\n";
  return report.feasible() ? kExitOk : kExitValidationFailure;
}

// --- export-milp / brute-force ----------------------------------------------

int ExportMilp(const std::string& instance_path, std::optional<double> big_m,
               bool literal, std::string out_path, std::ostream& out) {
  const auto start = Clock::now();
  const Instance instance = ReadInstanceFile(instance_path);
  MilpOptions options;
  options.order_binaries = !literal;
  const MilpModel model = big_m ? BuildMilp(instance, *big_m, options)
                                : BuildMilp(instance, options);
  if (out_path.empty()) out_path = instance.name() + ".lp";
  WriteTextFile(out_path, ToLpText(model, instance.name()));
  WriteManifest(out_path, "export-milp", instance_path, json::array(),
                {{"big_m", model.big_m}, {"literal", literal}},
                {fs::path(out_path)},
                SecondsSince(start));
  out << out_path << "\n"
      << "variables " << model.variables.size() << ", constraints "
      << model.constraints.size() << ", big_m " << model.big_m << "\n";
  return kExitOk;
}

int BruteForceCmd(const std::string& instance_path, std::uint64_t limit,
                  const std::string& out_path, std::ostream& out) {
  const auto start = Clock::now();
  const Instance instance = ReadInstanceFile(instance_path);
  const BruteForceResult result = BruteForce(instance, limit);
  const json doc = {{"instance", instance.name()},
                    {"makespan", result.makespan},
                    {"routes", SolutionToJson(result.best)["routes"]},
                    {"enumerated", result.enumerated}};
  if (!out_path.empty()) {
    WriteTextFile(out_path, Dump(doc));
    WriteManifest(out_path, "brute-force", instance_path, json::array(),
                  {{"limit", limit}}, {fs::path(out_path)},
                  SecondsSince(start));
  }
  out << Dump(doc);
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kIo:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Slip-time constrained vehicle routing toolkit", "stcvrp"};
  app.set_version_flag("--version", STCVRP_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic or imported instance");
  generate->add_option("--pattern", gen.pattern, "grid | random | clustered (or G/R/C)")->required();
  generate->add_option("--n", gen.n, "number of tasks");
  generate->add_option("--k", gen.k, "number of vehicles")->required();
  generate->add_option("--dmax", gen.d_max, "interference distance (m)")->required();
  generate->add_option("--sigma", gen.sigma, "grid jitter (m)")->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--out", gen.out, "output directory")->capture_default_str();
  generate->add_option("--from", gen.from, "TSPLIB or Solomon coordinate file");

  SolveArgs sol;
  auto* solve = app.add_subcommand(
      "solve",
      "Run the GA; aggregate std is the sample standard deviation (n-1)");
  solve->add_option("--instance", sol.instance)->required();
  solve->add_option("--seed", sol.seed, "seed of run 1; run r uses seed+r-1")->capture_default_str();
  solve->add_option("--runs", sol.runs)->capture_default_str();
  solve->add_option("--pop", sol.population, "population size");
  solve->add_option("--elites", sol.elites);
  solve->add_option("--pc", sol.crossover, "crossover rate");
  solve->add_option("--pm", sol.mutation, "mutation rate");
  solve->add_option("--tournament", sol.tournament);
  solve->add_option("--stagnation", sol.stagnation, "generations without improvement");
  solve->add_option("--max-gen", sol.max_generations);
  solve->add_option("--mix", sol.mix, "probability of 2-opt over insertion");
  solve->add_option("--threads", sol.threads, "fitness workers per run")->capture_default_str();
  solve->add_option("--jobs", sol.jobs, "runs in parallel")->capture_default_str();
  solve->add_option("--out", sol.out, "output directory")->capture_default_str();
  solve->add_flag("--no-timing", sol.no_timing, "write zero for all timings");

  std::string instance_path, solution_path, schedule_path, out_path;
  auto* evaluate = app.add_subcommand("evaluate", "Print the schedule of a solution");
  evaluate->add_option("--instance", instance_path)->required();
  evaluate->add_option("--solution", solution_path, "routes as JSON")->required();
  evaluate->add_option("--out", out_path, "also write the schedule here");

  auto* validate = app.add_subcommand("validate", "Check a schedule; exit 1 on violations");
  validate->add_option("--instance", instance_path)->required();
  validate->add_option("--solution", solution_path)->required();
  validate->add_option("--schedule", schedule_path, "schedule JSON (default: evaluate)");

  std::optional<double> big_m;
  auto* export_milp = app.add_subcommand("export-milp", "Write the MILP in CPLEX LP format");
  export_milp->add_option("--instance", instance_path)->required();
  export_milp->add_option("--bigm", big_m, "big-M (default: greedy upper bound)");
  export_milp->add_option("--out", out_path, "LP file (default: <name>.lp)");
  bool literal = false;
  export_milp->add_flag("--literal", literal,
                        "omit the y_i_j ordering binaries (infeasible when "
                        "interfering tasks use different vehicles)");

  std::uint64_t limit = kDefaultEnumerationLimit;
  auto* brute = app.add_subcommand("brute-force", "Exhaustive optimum for tiny instances");
  brute->add_option("--instance", instance_path)->required();
  brute->add_option("--limit", limit, "maximum number of solutions")->capture_default_str();
  brute->add_option("--out", out_path, "also write the result here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return Generate(gen, *generate, out);
    if (*solve) return Solve(sol, out);
    if (*evaluate) return EvaluateCmd(instance_path, solution_path, out_path, out);
    if (*validate) {
      return ValidateCmd(instance_path, solution_path, schedule_path, out);
    }
    if (*export_milp) return ExportMilp(instance_path, big_m, literal, out_path, out);
    if (*brute) return BruteForceCmd(instance_path, limit, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace stcvrp::cli
