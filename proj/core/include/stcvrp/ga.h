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

#ifndef STCVRP_GA_H_
#define STCVRP_GA_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/solution.h"

namespace stcvrp {

struct GaConfig {
  int population_size = 50;
  double crossover_rate = 0.8;
  double mutation_rate = 0.2;  // per child
  int elite_count = 2;
  int tournament_size = 3;
  int stagnation_limit = 1000;  // generations without improvement
  int max_generations = 20000;
  std::uint64_t seed = 1;
  double mutation_mix = 0.5;  // probability of 2-opt vs insertion
  int threads = 1;            // fitness evaluation workers
};

// Population 50 / 2 elites up to 100 tasks, 100 / 5 above.
GaConfig DefaultGaConfig(int num_tasks);

// Throws Error(kInvalidParameter) describing the first bad field.
void ValidateConfig(const GaConfig& config);

struct GenerationRecord {
  int generation = 0;
  double best_makespan = 0.0;  // best found so far
  double mean_makespan = 0.0;  // current population
  long long evaluations = 0;   // cumulative simulator calls
  double elapsed_s = 0.0;
};

struct GaResult {
  Solution best;
  double best_makespan = 0.0;
  double initial_best = 0.0;  // best of the initial population
  std::vector<GenerationRecord> log;  // generation 0 is the initial population
  long long evaluations = 0;
  int generations = 0;
  double wall_seconds = 0.0;
};

// Called after each generation is evaluated with the population and its
// fitness values.
using GenerationObserver = std::function<void(
    int generation, std::span<const Solution> population,
    std::span<const double> fitness)>;

// Generational GA with the event-driven simulator as fitness: elitism,
// tournament selection, OX1 crossover and hybrid 2-opt/insertion mutation.
// Stops after `stagnation_limit` generations without an improvement larger
// than 1e-9 s, or at `max_generations`. Reproducible from config.seed for
// any thread count.
GaResult Solve(const Instance& instance, const GaConfig& config,
               const GenerationObserver& observer = {});

// "generation,best_makespan,mean_makespan,evaluations,elapsed_s" + rows.
std::string ConvergenceCsv(const GaResult& result);

}  // namespace stcvrp

#endif  // STCVRP_GA_H_
