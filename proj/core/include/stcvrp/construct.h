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

#ifndef STCVRP_CONSTRUCT_H_
#define STCVRP_CONSTRUCT_H_

#include <span>
#include <vector>

#include "stcvrp/geometry.h"
#include "stcvrp/instance.h"
#include "stcvrp/rng.h"
#include "stcvrp/solution.h"

namespace stcvrp {

// Orders `tasks` by repeatedly moving to the nearest unvisited one, starting
// at the depot. Ties go to the lower task id.
Route NearestNeighborChain(const Instance& instance, std::vector<NodeId> tasks);

// Vehicles take turns (1, 2, ..., K, 1, ...) claiming the unvisited task
// nearest to their current position; ties go to the lower task id.
Solution NearestNeighborGreedy(const Instance& instance);

// Tasks sorted by polar angle around the depot and dealt in contiguous
// blocks of ceil(N/K); empty routes are repaired.
Solution BalancedAllocation(const Instance& instance);

struct KMeansResult {
  std::vector<int> labels;     // cluster per point
  std::vector<Point> centers;
  int iterations = 0;
};

// Lloyd's algorithm with farthest-point seeding: the first center is a
// random point, each further center the point farthest from those chosen.
KMeansResult KMeans(std::span<const Point> points, int k, Rng& rng,
                    int max_iterations = 50);

// One route per k-means cluster, each ordered by NearestNeighborChain.
Solution KMeansClustering(const Instance& instance, Rng& rng);

// Uniformly shuffled tasks cut into K non-empty routes at random points.
Solution RandomSolution(const Instance& instance, Rng& rng);

enum class InitStrategy { kKMeans, kNearestNeighbor, kBalanced, kRandom };

// `n` individuals, a quarter from each strategy in the order above (the
// remainder goes to the first strategies). Copies of a strategy after its
// first individual get two tasks swapped for diversity. Requires n >= 4.
std::vector<Solution> InitPopulation(const Instance& instance, int n,
                                     Rng& rng);

// Strategy used for individual `index` of a population of size `n`.
InitStrategy InitStrategyFor(int index, int n);

}  // namespace stcvrp

#endif  // STCVRP_CONSTRUCT_H_
