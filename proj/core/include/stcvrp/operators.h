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

#ifndef STCVRP_OPERATORS_H_
#define STCVRP_OPERATORS_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/rng.h"
#include "stcvrp/solution.h"

namespace stcvrp {

// Euclidean length in meters of depot -> route -> depot. No simulation.
double ApproxRouteCost(const Route& route, const Instance& instance);

// Draws `tournament_size` indices uniformly with replacement and returns the
// one with the smallest fitness (lowest index on ties).
std::size_t TournamentSelect(std::span<const double> fitness,
                             int tournament_size, Rng& rng);

// Order crossover on permutations: the child keeps `primary[first..last]`
// (inclusive) in place and fills the remaining slots, starting after `last`
// and wrapping around, with the missing values in the order they appear in
// `secondary` read from position last+1 onwards.
std::vector<NodeId> OrderCrossover(const std::vector<NodeId>& primary,
                                   const std::vector<NodeId>& secondary,
                                   std::size_t first, std::size_t last);

// Flattens both parents, applies OrderCrossover with two random cut points
// (child 1 keeps A's segment, child 2 keeps B's) and re-splits each child
// with its primary parent's route sizes.
std::pair<Solution, Solution> Ox1Crossover(const Solution& parent_a,
                                           const Solution& parent_b, Rng& rng);

// Reverses route[i..j] (inclusive); i and j may come in either order.
void ReverseSegment(Route& route, std::size_t i, std::size_t j);

struct InsertionPoint {
  std::size_t route = 0;
  std::size_t position = 0;       // index the task will occupy
  double approx_makespan = 0.0;   // s, after insertion
  double added_cost = 0.0;        // meters
};

// Approximate makespan without simulation: the largest Euclidean route
// length / speed + route size * service_time over all vehicles.
double ApproxMakespan(const Solution& solution, const Instance& instance);

// Slot (any route, any position) minimizing the approximate makespan after
// inserting `task`, then the added Euclidean length; earliest route, then
// earliest position, on ties.
InsertionPoint BestInsertion(const Solution& solution, NodeId task,
                             const Instance& instance);

// Random route of length >= 3, random segment reversed. Returns false if no
// route qualifies.
bool TwoOptMutation(Solution& solution, Rng& rng);

// Removes a random task from a route that keeps at least one task and
// reinserts it at BestInsertion. Returns false if every route has a single
// task.
bool InsertionMutation(Solution& solution, const Instance& instance, Rng& rng);

// 2-opt with probability `mutation_mix`, insertion otherwise; falls back to
// insertion when 2-opt has no eligible route.
void Mutate(Solution& solution, const Instance& instance, Rng& rng,
            double mutation_mix);

}  // namespace stcvrp

#endif  // STCVRP_OPERATORS_H_
