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

#include "stcvrp/ga.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "stcvrp/construct.h"
#include "stcvrp/error.h"
#include "stcvrp/operators.h"
#include "stcvrp/rng.h"
#include "stcvrp/simulator.h"
#include "text_util.h"

namespace stcvrp {
namespace {

constexpr double kImprovementThreshold = 1e-9;

struct Individual {
  Solution solution;
  double fitness = 0.0;
  bool evaluated = false;
};

void EvaluateAll(const Instance& instance, std::vector<Individual>& population,
                 int threads, long long& evaluations) {
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (!population[i].evaluated) pending.push_back(i);
  }
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      Individual& ind = population[pending[p]];
      ind.fitness = Makespan(instance, ind.solution);
      ind.evaluated = true;
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || pending.size() < 2 * workers) {
    work(0, pending.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pending.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < pending.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(pending.size(), begin + chunk));
    }
  }
  evaluations += static_cast<long long>(pending.size());
}

}  // namespace

GaConfig DefaultGaConfig(int num_tasks) {
  GaConfig config;
  if (num_tasks > 100) {
    config.population_size = 100;
    config.elite_count = 5;
  }
  return config;
}

void ValidateConfig(const GaConfig& c) {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw Error(ErrorKind::kInvalidParameter, message);
  };
  require(c.population_size >= 4, "population_size must be >= 4");
  require(c.crossover_rate >= 0.0 && c.crossover_rate <= 1.0,
          "crossover_rate must lie in [0, 1]");
  require(c.mutation_rate >= 0.0 && c.mutation_rate <= 1.0,
          "mutation_rate must lie in [0, 1]");
  require(c.mutation_mix >= 0.0 && c.mutation_mix <= 1.0,
          "mutation_mix must lie in [0, 1]");
  require(c.elite_count >= 0 && c.elite_count < c.population_size,
          "elite_count must satisfy 0 <= elite_count < population_size");
  require(c.tournament_size >= 2, "tournament_size must be >= 2");
  require(c.stagnation_limit >= 1, "stagnation_limit must be >= 1");
  require(c.max_generations >= 0, "max_generations must be >= 0");
  require(c.threads >= 1, "threads must be >= 1");
}

GaResult Solve(const Instance& instance, const GaConfig& config,
               const GenerationObserver& observer) {
  ValidateConfig(config);
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - started).count();
  };

  Rng rng(config.seed);
  GaResult result;
  const auto pop_size = static_cast<std::size_t>(config.population_size);

  std::vector<Individual> population;
  population.reserve(pop_size);
  for (Solution& s : InitPopulation(instance, config.population_size, rng)) {
    population.push_back({std::move(s), 0.0, false});
  }

  std::vector<Solution> solutions;
  std::vector<double> fitness;
  auto record = [&](int generation) {
    fitness.clear();
    for (const Individual& ind : population) fitness.push_back(ind.fitness);
    const auto best_it = std::min_element(fitness.begin(), fitness.end());
    const auto best_index =
        static_cast<std::size_t>(best_it - fitness.begin());
    const bool improved =
        generation == 0 || *best_it < result.best_makespan - kImprovementThreshold;
    if (generation == 0 || *best_it < result.best_makespan) {
      result.best_makespan = *best_it;
      result.best = population[best_index].solution;
    }
    const double mean = std::accumulate(fitness.begin(), fitness.end(), 0.0) /
                        static_cast<double>(fitness.size());
    result.log.push_back({generation, result.best_makespan, mean,
                          result.evaluations, elapsed()});
    if (observer) {
      solutions.clear();
      for (const Individual& ind : population) solutions.push_back(ind.solution);
      observer(generation, solutions, fitness);
    }
    return improved;
  };

  EvaluateAll(instance, population, config.threads, result.evaluations);
  record(0);
  result.initial_best = result.best_makespan;

  int stagnant = 0;
  std::vector<std::size_t> order(pop_size);
  for (int generation = 1; generation <= config.max_generations; ++generation) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return population[a].fitness < population[b].fitness;
                     });
    std::vector<Individual> next;
    next.reserve(pop_size);
    for (int e = 0; e < config.elite_count; ++e) {
      next.push_back(population[order[static_cast<std::size_t>(e)]]);
    }
    while (next.size() < pop_size) {
      const Solution& p1 =
          population[TournamentSelect(fitness, config.tournament_size, rng)]
              .solution;
      const Solution& p2 =
          population[TournamentSelect(fitness, config.tournament_size, rng)]
              .solution;
      Solution c1;
      Solution c2;
      if (rng.Bernoulli(config.crossover_rate)) {
        std::tie(c1, c2) = Ox1Crossover(p1, p2, rng);
      } else {
        c1 = p1;
        c2 = p2;
      }
      if (rng.Bernoulli(config.mutation_rate)) {
        Mutate(c1, instance, rng, config.mutation_mix);
      }
      if (rng.Bernoulli(config.mutation_rate)) {
        Mutate(c2, instance, rng, config.mutation_mix);
      }
      next.push_back({std::move(c1), 0.0, false});
      if (next.size() < pop_size) next.push_back({std::move(c2), 0.0, false});
    }
    population = std::move(next);
    EvaluateAll(instance, population, config.threads, result.evaluations);
    result.generations = generation;
    if (record(generation)) {
      stagnant = 0;
    } else if (++stagnant >= config.stagnation_limit) {
      break;
    }
  }
  result.wall_seconds = elapsed();
  return result;
}

std::string ConvergenceCsv(const GaResult& result) {
  std::ostringstream out;
  out << "generation,best_makespan,mean_makespan,evaluations,elapsed_s\n";
  for (const GenerationRecord& r : result.log) {
    out << r.generation << ',' << internal::FormatDouble(r.best_makespan) << ','
        << internal::FormatDouble(r.mean_makespan) << ',' << r.evaluations
        << ',' << internal::FormatDouble(r.elapsed_s) << '\n';
  }
  return out.str();
}

}  // namespace stcvrp
