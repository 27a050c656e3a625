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
#include <limits>

#include "stcvrp/error.h"

namespace stcvrp {
namespace {

double Meters(const Instance& instance, NodeId a, NodeId b) {
  return Distance(instance.node(a), instance.node(b));
}

}  // namespace

double ApproxRouteCost(const Route& route, const Instance& instance) {
  if (route.empty()) return 0.0;
  double total = Meters(instance, 0, route.front());
  for (std::size_t i = 1; i < route.size(); ++i) {
    total += Meters(instance, route[i - 1], route[i]);
  }
  return total + Meters(instance, route.back(), 0);
}

std::size_t TournamentSelect(std::span<const double> fitness,
                             int tournament_size, Rng& rng) {
  if (fitness.empty()) {
    throw Error(ErrorKind::kInvalidParameter, "tournament over empty population");
  }
  std::size_t best = rng.Below(fitness.size());
  for (int draw = 1; draw < tournament_size; ++draw) {
    const std::size_t candidate = rng.Below(fitness.size());
    if (fitness[candidate] < fitness[best] ||
        (fitness[candidate] == fitness[best] && candidate < best)) {
      best = candidate;
    }
  }
  return best;
}

std::vector<NodeId> OrderCrossover(const std::vector<NodeId>& primary,
                                   const std::vector<NodeId>& secondary,
                                   std::size_t first, std::size_t last) {
  const std::size_t n = primary.size();
  if (secondary.size() != n || first > last || last >= n) {
    throw Error(ErrorKind::kInvalidParameter, "bad order crossover arguments");
  }
  NodeId max_id = 0;
  for (NodeId v : primary) max_id = std::max(max_id, v);
  std::vector<bool> kept(static_cast<std::size_t>(max_id) + 1, false);
  std::vector<NodeId> child(n, 0);
  for (std::size_t i = first; i <= last; ++i) {
    child[i] = primary[i];
    kept[static_cast<std::size_t>(primary[i])] = true;
  }
  std::size_t write = (last + 1) % n;
  for (std::size_t offset = 0; offset < n; ++offset) {
    const NodeId value = secondary[(last + 1 + offset) % n];
    if (value < 0 || value > max_id || kept[static_cast<std::size_t>(value)]) {
      continue;
    }
    child[write] = value;
    write = (write + 1) % n;
  }
  return child;
}

std::pair<Solution, Solution> Ox1Crossover(const Solution& parent_a,
                                           const Solution& parent_b, Rng& rng) {
  const std::vector<NodeId> a = Flatten(parent_a);
  const std::vector<NodeId> b = Flatten(parent_b);
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidSolution,
                "crossover parents cover different task counts");
  }
  if (a.empty()) return {parent_a, parent_b};
  std::size_t first = rng.Below(a.size());
  std::size_t last = rng.Below(a.size());
  if (first > last) std::swap(first, last);
  Solution child_a = Split(OrderCrossover(a, b, first, last), RouteSizes(parent_a));
  Solution child_b = Split(OrderCrossover(b, a, first, last), RouteSizes(parent_b));
  RepairEmptyRoutes(child_a);
  RepairEmptyRoutes(child_b);
  return {std::move(child_a), std::move(child_b)};
}

void ReverseSegment(Route& route, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= route.size()) {
    throw Error(ErrorKind::kIndex, "segment end beyond route length");
  }
  std::reverse(route.begin() + static_cast<std::ptrdiff_t>(i),
               route.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

double ApproxMakespan(const Solution& solution, const Instance& instance) {
  double worst = 0.0;
  for (const Route& route : solution.routes) {
    worst = std::max(worst, ApproxRouteCost(route, instance) / instance.speed() +
                                static_cast<double>(route.size()) *
                                    instance.service_time());
  }
  return worst;
}

InsertionPoint BestInsertion(const Solution& solution, NodeId task,
                             const Instance& instance) {
  const std::size_t routes = solution.routes.size();
  std::vector<double> span(routes);
  for (std::size_t k = 0; k < routes; ++k) {
    span[k] = ApproxRouteCost(solution.routes[k], instance) / instance.speed() +
              static_cast<double>(solution.routes[k].size()) *
                  instance.service_time();
  }
  // prefix/suffix maxima give the largest span among the other routes.
  std::vector<double> prefix(routes + 1, 0.0), suffix(routes + 1, 0.0);
  for (std::size_t k = 0; k < routes; ++k) {
    prefix[k + 1] = std::max(prefix[k], span[k]);
    suffix[routes - 1 - k] = std::max(suffix[routes - k], span[routes - 1 - k]);
  }

  InsertionPoint best;
  best.approx_makespan = std::numeric_limits<double>::infinity();
  best.added_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < routes; ++k) {
    const Route& route = solution.routes[k];
    const double others = std::max(prefix[k], suffix[k + 1]);
    for (std::size_t pos = 0; pos <= route.size(); ++pos) {
      const NodeId before = pos == 0 ? 0 : route[pos - 1];
      const NodeId after = pos == route.size() ? 0 : route[pos];
      const double added = Meters(instance, before, task) +
                           Meters(instance, task, after) -
                           Meters(instance, before, after);
      const double makespan = std::max(
          others, span[k] + added / instance.speed() + instance.service_time());
      if (makespan < best.approx_makespan ||
          (makespan == best.approx_makespan && added < best.added_cost)) {
        best = {k, pos, makespan, added};
      }
    }
  }
  return best;
}

bool TwoOptMutation(Solution& solution, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    if (solution.routes[k].size() >= 3) eligible.push_back(k);
  }
  if (eligible.empty()) return false;
  Route& route = solution.routes[eligible[rng.Below(eligible.size())]];
  const std::size_t i = rng.Below(route.size());
  std::size_t j = rng.Below(route.size() - 1);
  if (j >= i) ++j;
  ReverseSegment(route, i, j);
  return true;
}

bool InsertionMutation(Solution& solution, const Instance& instance, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> movable;
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    if (solution.routes[k].size() < 2) continue;
    for (std::size_t pos = 0; pos < solution.routes[k].size(); ++pos) {
      movable.emplace_back(k, pos);
    }
  }
  if (movable.empty()) return false;
  const auto [k, pos] = movable[rng.Below(movable.size())];
  Route& source = solution.routes[k];
  const NodeId task = source[pos];
  source.erase(source.begin() + static_cast<std::ptrdiff_t>(pos));
  const InsertionPoint slot = BestInsertion(solution, task, instance);
  Route& target = solution.routes[slot.route];
  target.insert(target.begin() + static_cast<std::ptrdiff_t>(slot.position),
                task);
  return true;
}

void Mutate(Solution& solution, const Instance& instance, Rng& rng,
            double mutation_mix) {
  if (rng.Bernoulli(mutation_mix) && TwoOptMutation(solution, rng)) return;
  InsertionMutation(solution, instance, rng);
}

}  // namespace stcvrp
