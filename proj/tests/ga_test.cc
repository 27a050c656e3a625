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

#include <sstream>

#include "gtest/gtest.h"
#include "stcvrp/error.h"
#include "stcvrp/simulator.h"
#include "support/fixtures.h"

namespace stcvrp {
namespace {

GaConfig QuickConfig(int n, std::uint64_t seed) {
  GaConfig c = DefaultGaConfig(n);
  c.seed = seed;
  c.stagnation_limit = 50;
  c.max_generations = 300;
  return c;
}

TEST(GaConfigTest, Defaults) {
  const GaConfig small = DefaultGaConfig(50);
  EXPECT_EQ(small.population_size, 50);
  EXPECT_EQ(small.elite_count, 2);
  EXPECT_EQ(small.crossover_rate, 0.8);
  EXPECT_EQ(small.mutation_rate, 0.2);
  EXPECT_EQ(small.tournament_size, 3);
  EXPECT_EQ(small.stagnation_limit, 1000);
  EXPECT_EQ(small.max_generations, 20000);
  EXPECT_EQ(small.mutation_mix, 0.5);
  const GaConfig large = DefaultGaConfig(575);
  EXPECT_EQ(large.population_size, 100);
  EXPECT_EQ(large.elite_count, 5);
}

TEST(GaConfigTest, RejectsInfeasibleConfig) {
  const auto expect_invalid = [](GaConfig c) {
    try {
      ValidateConfig(c);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
    }
  };
  GaConfig c;
  c.crossover_rate = 1.5;
  expect_invalid(c);
  c = {};
  c.mutation_rate = -0.1;
  expect_invalid(c);
  c = {};
  c.elite_count = c.population_size;
  expect_invalid(c);
  c = {};
  c.tournament_size = 1;
  expect_invalid(c);
  c = {};
  c.stagnation_limit = 0;
  expect_invalid(c);
  EXPECT_THROW(Solve(testing::LineInstance(), c), Error);
}

TEST(GaTest, LineInstanceReachesOptimum) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GaResult r = Solve(testing::LineInstance(), QuickConfig(3, seed));
    EXPECT_EQ(r.best_makespan, 48.0);
    EXPECT_EQ(Makespan(testing::LineInstance(), r.best), 48.0);
  }
}

TEST(GaTest, DeterministicForSeed) {
  const Instance inst = testing::RandomInstance(20, 3, 4);
  const GaResult a = Solve(inst, QuickConfig(20, 9));
  const GaResult b = Solve(inst, QuickConfig(20, 9));
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.best_makespan, b.best_makespan);
  ASSERT_EQ(a.log.size(), b.log.size());
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    EXPECT_EQ(a.log[i].best_makespan, b.log[i].best_makespan);
    EXPECT_EQ(a.log[i].mean_makespan, b.log[i].mean_makespan);
    EXPECT_EQ(a.log[i].evaluations, b.log[i].evaluations);
  }
}

TEST(GaTest, ThreadsDoNotChangeResults) {
  const Instance inst = testing::RandomInstance(20, 3, 4);
  GaConfig c = QuickConfig(20, 9);
  const GaResult one = Solve(inst, c);
  c.threads = 3;
  const GaResult three = Solve(inst, c);
  EXPECT_EQ(one.best, three.best);
  EXPECT_EQ(one.log.size(), three.log.size());
}

TEST(GaTest, LogIsMonotoneAndNeverRegresses) {
  const Instance inst = testing::RandomInstance(25, 4, 8);
  const GaResult r = Solve(inst, QuickConfig(25, 3));
  ASSERT_FALSE(r.log.empty());
  EXPECT_EQ(r.log.front().generation, 0);
  EXPECT_EQ(r.log.front().best_makespan, r.initial_best);
  for (std::size_t i = 1; i < r.log.size(); ++i) {
    EXPECT_LE(r.log[i].best_makespan, r.log[i - 1].best_makespan);
    EXPECT_GE(r.log[i].evaluations, r.log[i - 1].evaluations);
  }
  EXPECT_LE(r.best_makespan, r.initial_best);
  EXPECT_EQ(r.log.back().best_makespan, r.best_makespan);
  EXPECT_EQ(r.evaluations, r.log.back().evaluations);
}

TEST(GaTest, StopsOnStagnationOrCap) {
  const Instance inst = testing::RandomInstance(15, 3, 2);
  GaConfig c = QuickConfig(15, 1);
  c.stagnation_limit = 5;
  const GaResult r = Solve(inst, c);
  EXPECT_LE(r.generations, c.max_generations);
  // The last `stagnation_limit` generations show no improvement.
  const std::size_t n = r.log.size();
  ASSERT_GT(n, 5u);
  EXPECT_EQ(r.log[n - 1].best_makespan, r.log[n - 6].best_makespan);
  c.max_generations = 3;
  c.stagnation_limit = 1000;
  EXPECT_EQ(Solve(inst, c).generations, 3);
}

TEST(GaTest, FitnessEqualsSimulatorMakespan) {
  const Instance inst = testing::RandomInstance(15, 3, 6);
  GaConfig c = QuickConfig(15, 2);
  c.max_generations = 20;
  int checked = 0;
  Solve(inst, c,
        [&](int, std::span<const Solution> pop, std::span<const double> fit) {
          for (std::size_t i = 0; i < pop.size(); ++i) {
            ASSERT_EQ(Makespan(inst, pop[i]), fit[i]);
            ++checked;
          }
        });
  EXPECT_GT(checked, 0);
}

TEST(GaTest, ConvergenceCsvHeader) {
  const GaResult r = Solve(testing::LineInstance(), QuickConfig(3, 1));
  std::istringstream csv(ConvergenceCsv(r));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "generation,best_makespan,mean_makespan,evaluations,elapsed_s");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  EXPECT_EQ(static_cast<std::size_t>(rows), r.log.size());
}

}  // namespace
}  // namespace stcvrp
