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

#include "stcvrp/construct.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stcvrp/error.h"

namespace stcvrp {
namespace {

// Index of the unvisited task nearest to `from`; lowest id on ties.
std::size_t NearestIndex(const Instance& instance, NodeId from,
                         const std::vector<NodeId>& candidates) {
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = Distance(instance.node(from), instance.node(candidates[i]));
    if (d < best_distance ||
        (d == best_distance && candidates[i] < candidates[best])) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

void SwapTwoTasks(Solution& solution, Rng& rng) {
  std::vector<NodeId> flat = Flatten(solution);
  if (flat.size() < 2) return;
  const auto sizes = RouteSizes(solution);
  const std::size_t a = rng.Below(flat.size());
  std::size_t b = rng.Below(flat.size() - 1);
  if (b >= a) ++b;
  std::swap(flat[a], flat[b]);
  solution = Split(flat, sizes);
}

}  // namespace

Route NearestNeighborChain(const Instance& instance, std::vector<NodeId> tasks) {
  Route route;
  route.reserve(tasks.size());
  NodeId current = 0;
  while (!tasks.empty()) {
    const std::size_t next = NearestIndex(instance, current, tasks);
    current = tasks[next];
    route.push_back(current);
    tasks.erase(tasks.begin() + static_cast<std::ptrdiff_t>(next));
  }
  return route;
}

Solution NearestNeighborGreedy(const Instance& instance) {
  const int k_max = instance.num_vehicles();
  std::vector<NodeId> unvisited(static_cast<std::size_t>(instance.num_tasks()));
  std::iota(unvisited.begin(), unvisited.end(), 1);
  Solution solution;
  solution.routes.resize(static_cast<std::size_t>(k_max));
  std::vector<NodeId> position(static_cast<std::size_t>(k_max), 0);
  for (int turn = 0; !unvisited.empty(); turn = (turn + 1) % k_max) {
    const auto k = static_cast<std::size_t>(turn);
    const std::size_t next = NearestIndex(instance, position[k], unvisited);
    position[k] = unvisited[next];
    solution.routes[k].push_back(unvisited[next]);
    unvisited.erase(unvisited.begin() + static_cast<std::ptrdiff_t>(next));
  }
  return solution;
}

Solution BalancedAllocation(const Instance& instance) {
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  std::vector<std::pair<double, NodeId>> by_angle;
  by_angle.reserve(static_cast<std::size_t>(n));
  for (NodeId task = 1; task <= n; ++task) {
    const Point& p = instance.node(task);
    by_angle.emplace_back(
        std::atan2(p.y - instance.depot().y, p.x - instance.depot().x), task);
  }
  std::sort(by_angle.begin(), by_angle.end());
  const int block = (n + k_max - 1) / k_max;
  Solution solution;
  solution.routes.resize(static_cast<std::size_t>(k_max));
  for (int i = 0; i < n; ++i) {
    solution.routes[static_cast<std::size_t>(i / block)].push_back(
        by_angle[static_cast<std::size_t>(i)].second);
  }
  RepairEmptyRoutes(solution);
  return solution;
}

KMeansResult KMeans(std::span<const Point> points, int k, Rng& rng,
                    int max_iterations) {
  if (k < 1 || static_cast<std::size_t>(k) > points.size()) {
    throw Error(ErrorKind::kInvalidParameter,
                "k-means needs 1 <= k <= number of points");
  }
  KMeansResult result;
  std::vector<double> nearest(points.size(),
                              std::numeric_limits<double>::infinity());
  std::size_t chosen = rng.Below(points.size());
  for (int c = 0; c < k; ++c) {
    result.centers.push_back(points[chosen]);
    std::size_t farthest = 0;
    double farthest_distance = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      nearest[i] = std::min(nearest[i], Distance(points[i], points[chosen]));
      if (nearest[i] > farthest_distance) {
        farthest_distance = nearest[i];
        farthest = i;
      }
    }
    chosen = farthest;
  }

  result.labels.assign(points.size(), -1);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      int best = 0;
      double best_distance = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d =
            Distance(points[i], result.centers[static_cast<std::size_t>(c)]);
        if (d < best_distance) {
          best_distance = d;
          best = c;
        }
      }
      if (result.labels[i] != best) {
        result.labels[i] = best;
        changed = true;
      }
    }
    result.iterations = iter + 1;
    if (!changed) break;

    std::vector<Point> sums(static_cast<std::size_t>(k));
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto c = static_cast<std::size_t>(result.labels[i]);
      sums[c].x += points[i].x;
      sums[c].y += points[i].y;
      ++counts[c];
    }
    for (std::size_t c = 0; c < sums.size(); ++c) {
      // An empty cluster keeps its previous center.
      if (counts[c] == 0) continue;
      result.centers[c] = {sums[c].x / counts[c], sums[c].y / counts[c]};
    }
  }
  return result;
}

Solution KMeansClustering(const Instance& instance, Rng& rng) {
  const int k_max = instance.num_vehicles();
  const KMeansResult clusters = KMeans(instance.tasks(), k_max, rng);
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(k_max));
  for (std::size_t i = 0; i < clusters.labels.size(); ++i) {
    members[static_cast<std::size_t>(clusters.labels[i])].push_back(
        static_cast<NodeId>(i + 1));
  }
  Solution solution;
  for (auto& tasks : members) {
    solution.routes.push_back(NearestNeighborChain(instance, std::move(tasks)));
  }
  RepairEmptyRoutes(solution);
  return solution;
}

Solution RandomSolution(const Instance& instance, Rng& rng) {
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  std::vector<NodeId> tasks(static_cast<std::size_t>(n));
  std::iota(tasks.begin(), tasks.end(), 1);
  rng.Shuffle(tasks.begin(), tasks.end());

  // K-1 distinct cut positions in 1..N-1 via a partial shuffle.
  std::vector<std::size_t> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  for (int i = 0; i < k_max - 1; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   rng.Below(cuts.size() - static_cast<std::size_t>(i));
    std::swap(cuts[static_cast<std::size_t>(i)], cuts[j]);
  }
  cuts.resize(static_cast<std::size_t>(k_max - 1));
  std::sort(cuts.begin(), cuts.end());

  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t cut : cuts) {
    sizes.push_back(cut - prev);
    prev = cut;
  }
  sizes.push_back(static_cast<std::size_t>(n) - prev);
  return Split(tasks, sizes);
}

InitStrategy InitStrategyFor(int index, int n) {
  const int base = n / 4;
  const int extra = n % 4;
  int start = 0;
  for (int s = 0; s < 4; ++s) {
    const int share = base + (s < extra ? 1 : 0);
    if (index < start + share) return static_cast<InitStrategy>(s);
    start += share;
  }
  return InitStrategy::kRandom;
}

std::vector<Solution> InitPopulation(const Instance& instance, int n,
                                     Rng& rng) {
  if (n < 4) {
    throw Error(ErrorKind::kInvalidParameter,
                "population needs at least 4 individuals, one per strategy");
  }
  std::vector<Solution> population;
  population.reserve(static_cast<std::size_t>(n));
  int copies = 0;
  InitStrategy previous = InitStrategy::kKMeans;
  for (int i = 0; i < n; ++i) {
    const InitStrategy strategy = InitStrategyFor(i, n);
    copies = (i > 0 && strategy == previous) ? copies + 1 : 0;
    previous = strategy;
    Solution individual;
    switch (strategy) {
      case InitStrategy::kKMeans:
        individual = KMeansClustering(instance, rng);
        break;
      case InitStrategy::kNearestNeighbor:
        individual = NearestNeighborGreedy(instance);
        break;
      case InitStrategy::kBalanced:
        individual = BalancedAllocation(instance);
        break;
      case InitStrategy::kRandom:
        individual = RandomSolution(instance, rng);
        break;
    }
    if (copies > 0 && strategy != InitStrategy::kRandom) {
      SwapTwoTasks(individual, rng);
    }
    population.push_back(std::move(individual));
  }
  return population;
}

}  // namespace stcvrp
