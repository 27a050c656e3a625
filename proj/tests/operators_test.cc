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

#include "stcvrp/operators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "stcvrp/construct.h"
#include "stcvrp/geometry.h"
#include "stcvrp/rng.h"
#include "support/fixtures.h"

namespace stcvrp {
namespace {

TEST(ApproxRouteCostTest, Examples) {
  const Instance inst = testing::LineInstance();
  EXPECT_EQ(ApproxRouteCost({}, inst), 0.0);
  EXPECT_DOUBLE_EQ(ApproxRouteCost({1, 2}, inst), 40.0 + 40.0 + 80.0);
  const Instance rnd = testing::RandomInstance(10, 2, 4);
  const Route r{3, 7, 1, 9};
  Route rev(r.rbegin(), r.rend());
  EXPECT_NEAR(ApproxRouteCost(r, rnd), ApproxRouteCost(rev, rnd), 1e-9);
}

TEST(TournamentTest, MinimumWins) {
  const std::vector<double> fitness{100, 90, 120};
  // Oracle: replay the same draws and take the best of them.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed), replay(seed);
    const std::size_t picked = TournamentSelect(fitness, 3, rng);
    std::size_t best = replay.Below(3);
    for (int i = 1; i < 3; ++i) {
      const std::size_t c = replay.Below(3);
      if (fitness[c] < fitness[best] || (fitness[c] == fitness[best] && c < best)) {
        best = c;
      }
    }
    EXPECT_EQ(picked, best);
  }
  // A large tournament essentially always samples index 1.
  Rng rng(7);
  EXPECT_EQ(TournamentSelect(fitness, 64, rng), 1u);
}

TEST(TournamentTest, TiesGoToLowerIndex) {
  const std::vector<double> fitness{90, 90};
  Rng rng(3);
  EXPECT_EQ(TournamentSelect(fitness, 64, rng), 0u);
}

TEST(OrderCrossoverTest, ClassicTrace) {
  const std::vector<NodeId> a{1, 2, 3, 4, 5, 6, 7};
  const std::vector<NodeId> b{3, 7, 5, 1, 6, 2, 4};
  EXPECT_EQ(OrderCrossover(a, b, 2, 4), (std::vector<NodeId>{1, 6, 3, 4, 5, 2, 7}));
}

TEST(OrderCrossoverTest, IdenticalParentsAreFixedPoints) {
  const std::vector<NodeId> a{4, 2, 6, 1, 3, 5};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      EXPECT_EQ(OrderCrossover(a, a, i, j), a);
    }
  }
  const Solution s{{{4, 2}, {6, 1, 3}, {5}}};
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto [c1, c2] = Ox1Crossover(s, s, rng);
    EXPECT_EQ(c1, s);
    EXPECT_EQ(c2, s);
  }
}

TEST(Ox1CrossoverTest, ChildrenKeepParentRouteSizes) {
  const Solution a{{{1, 2}, {3, 4, 5}, {6}}};
  const Solution b{{{6, 5, 4, 3}, {2}, {1}}};
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto [c1, c2] = Ox1Crossover(a, b, rng);
    EXPECT_EQ(RouteSizes(c1), RouteSizes(a));
    EXPECT_EQ(RouteSizes(c2), RouteSizes(b));
    EXPECT_FALSE(PartitionProblem(c1, 6, 3));
    EXPECT_FALSE(PartitionProblem(c2, 6, 3));
  }
}

TEST(ReverseSegmentTest, Example) {
  Route r{1, 2, 3, 4, 5};
  ReverseSegment(r, 1, 3);
  EXPECT_EQ(r, (Route{1, 4, 3, 2, 5}));
  ReverseSegment(r, 3, 1);
  EXPECT_EQ(r, (Route{1, 2, 3, 4, 5}));
}

TEST(BestInsertionTest, EarliestOfTiedSlots) {
  const Instance inst = testing::LineInstance();
  const InsertionPoint p = BestInsertion({{{1, 2}}}, 3, inst);
  // Route lengths with task 3 at slots 0, 1, 2: 240, 320, 240 -> slot 0.
  const double base = ApproxRouteCost({1, 2}, inst);
  EXPECT_DOUBLE_EQ(ApproxRouteCost({3, 1, 2}, inst), 240.0);
  EXPECT_DOUBLE_EQ(ApproxRouteCost({1, 3, 2}, inst), 320.0);
  EXPECT_DOUBLE_EQ(ApproxRouteCost({1, 2, 3}, inst), 240.0);
  EXPECT_EQ(p.route, 0u);
  EXPECT_EQ(p.position, 0u);
  EXPECT_DOUBLE_EQ(p.added_cost, 240.0 - base);
  EXPECT_DOUBLE_EQ(p.approx_makespan, 240.0 / 5.0 + 3 * 8.0);
}

TEST(BestInsertionTest, PrefersShorterApproximateMakespan) {
  const Instance inst = testing::LineInstance();
  // Appending to the empty route adds more length but balances the fleet.
  const InsertionPoint p = BestInsertion({{{1, 2}, {}}}, 3, inst);
  EXPECT_EQ(p.route, 1u);
  EXPECT_EQ(p.position, 0u);
  EXPECT_DOUBLE_EQ(p.approx_makespan, 160.0 / 5.0 + 2 * 8.0);
  EXPECT_DOUBLE_EQ(ApproxMakespan({{{1, 2}, {3}}}, inst), p.approx_makespan);
}

// Approximate makespan recomputed from coordinates.
double OracleSpan(const Solution& s, const Instance& inst) {
  double worst = 0.0;
  for (const Route& r : s.routes) {
    double len = 0.0;
    Point prev = inst.node(0);
    for (NodeId t : r) {
      len += std::hypot(inst.node(t).x - prev.x, inst.node(t).y - prev.y);
      prev = inst.node(t);
    }
    len += std::hypot(inst.node(0).x - prev.x, inst.node(0).y - prev.y);
    worst = std::max(worst, len / inst.speed() +
                                static_cast<double>(r.size()) * inst.service_time());
  }
  return worst;
}

TEST(BestInsertionTest, MatchesExhaustiveSearch) {
  const Instance inst = testing::RandomInstance(15, 3, 21);
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    Solution s = RandomSolution(inst, rng);
    const std::size_t from = rng.Below(3);
    if (s.routes[from].size() < 2) continue;
    const NodeId task = s.routes[from].back();
    s.routes[from].pop_back();
    const InsertionPoint p = BestInsertion(s, task, inst);
    double best_span = 1e300;
    for (std::size_t r = 0; r < s.routes.size(); ++r) {
      for (std::size_t pos = 0; pos <= s.routes[r].size(); ++pos) {
        Solution c = s;
        c.routes[r].insert(c.routes[r].begin() + static_cast<long>(pos), task);
        best_span = std::min(best_span, OracleSpan(c, inst));
      }
    }
    double best_added = 1e300;
    for (std::size_t r = 0; r < s.routes.size(); ++r) {
      const double before = ApproxRouteCost(s.routes[r], inst);
      for (std::size_t pos = 0; pos <= s.routes[r].size(); ++pos) {
        Solution c = s;
        c.routes[r].insert(c.routes[r].begin() + static_cast<long>(pos), task);
        if (OracleSpan(c, inst) > best_span + 1e-9) continue;
        best_added = std::min(best_added, ApproxRouteCost(c.routes[r], inst) - before);
      }
    }
    Solution chosen = s;
    chosen.routes[p.route].insert(
        chosen.routes[p.route].begin() + static_cast<long>(p.position), task);
    EXPECT_NEAR(OracleSpan(chosen, inst), best_span, 1e-9);
    EXPECT_NEAR(p.approx_makespan, best_span, 1e-9);
    EXPECT_NEAR(p.added_cost, best_added, 1e-9);
  }
}

TEST(MutationTest, TwoOptNeedsLongRoute) {
  Solution s{{{1}, {2, 3}}};
  Rng rng(1);
  EXPECT_FALSE(TwoOptMutation(s, rng));
  Solution t{{{1, 2, 3, 4, 5}, {6}}};
  EXPECT_TRUE(TwoOptMutation(t, rng));
  EXPECT_EQ(t.routes[1], (Route{6}));
  // Reversing a segment of two or more tasks always changes the route.
  EXPECT_NE(t.routes[0], (Route{1, 2, 3, 4, 5}));
  Route sorted = t.routes[0];
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (Route{1, 2, 3, 4, 5}));
}

TEST(MutationTest, InsertionNoOpWhenEveryRouteIsSingle) {
  const Instance inst = testing::CascadeInstance();
  Solution s{{{1}, {2}, {3}}};
  Rng rng(1);
  EXPECT_FALSE(InsertionMutation(s, inst, rng));
  EXPECT_EQ(s, (Solution{{{1}, {2}, {3}}}));
}

TEST(OperatorPropertyTest, TenThousandApplicationsPreservePartition) {
  const Instance inst = testing::RandomInstance(18, 4, 77);
  Rng rng(31337);
  std::vector<Solution> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(RandomSolution(inst, rng));
  for (int step = 0; step < 10000; ++step) {
    const std::size_t i = rng.Below(pool.size());
    const std::size_t j = rng.Below(pool.size());
    if (rng.Bernoulli(0.5)) {
      auto [c1, c2] = Ox1Crossover(pool[i], pool[j], rng);
      pool[i] = std::move(c1);
      pool[j] = std::move(c2);
    } else {
      Mutate(pool[i], inst, rng, 0.5);
    }
    ASSERT_FALSE(PartitionProblem(pool[i], 18, 4)) << "step " << step;
    ASSERT_FALSE(PartitionProblem(pool[j], 18, 4)) << "step " << step;
  }
}

}  // namespace
}  // namespace stcvrp
