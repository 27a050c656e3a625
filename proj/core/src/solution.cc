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

#include "stcvrp/solution.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stcvrp/error.h"

namespace stcvrp {

std::optional<std::string> PartitionProblem(const Solution& solution,
                                            int num_tasks, int num_vehicles,
                                            bool allow_empty_routes) {
  if (static_cast<int>(solution.routes.size()) != num_vehicles) {
    return "expected " + std::to_string(num_vehicles) + " routes, got " +
           std::to_string(solution.routes.size());
  }
  std::vector<int> seen(static_cast<std::size_t>(num_tasks) + 1, 0);
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    const Route& route = solution.routes[k];
    if (route.empty() && !allow_empty_routes) {
      return "route " + std::to_string(k) + " is empty";
    }
    for (NodeId task : route) {
      if (task < 1 || task > num_tasks) {
        return "task id " + std::to_string(task) + " outside 1.." +
               std::to_string(num_tasks);
      }
      if (seen[static_cast<std::size_t>(task)]++ > 0) {
        return "task " + std::to_string(task) + " appears more than once";
      }
    }
  }
  for (int task = 1; task <= num_tasks; ++task) {
    if (seen[static_cast<std::size_t>(task)] == 0) {
      return "task " + std::to_string(task) + " is not served";
    }
  }
  return std::nullopt;
}

void CheckPartition(const Solution& solution, const Instance& instance,
                    bool allow_empty_routes) {
  if (auto problem =
          PartitionProblem(solution, instance.num_tasks(),
                           instance.num_vehicles(), allow_empty_routes)) {
    throw Error(ErrorKind::kInvalidSolution, *problem);
  }
}

std::vector<NodeId> Flatten(const Solution& solution) {
  std::vector<NodeId> flat;
  for (const Route& route : solution.routes) {
    flat.insert(flat.end(), route.begin(), route.end());
  }
  return flat;
}

std::vector<std::size_t> RouteSizes(const Solution& solution) {
  std::vector<std::size_t> sizes;
  sizes.reserve(solution.routes.size());
  for (const Route& route : solution.routes) sizes.push_back(route.size());
  return sizes;
}

Solution Split(const std::vector<NodeId>& permutation,
               const std::vector<std::size_t>& sizes) {
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) !=
      permutation.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "route sizes do not sum to the permutation length");
  }
  Solution solution;
  solution.routes.reserve(sizes.size());
  auto it = permutation.begin();
  for (std::size_t size : sizes) {
    solution.routes.emplace_back(it, it + static_cast<std::ptrdiff_t>(size));
    it += static_cast<std::ptrdiff_t>(size);
  }
  return solution;
}

void RepairEmptyRoutes(Solution& solution) {
  for (Route& route : solution.routes) {
    if (!route.empty()) continue;
    auto longest = std::max_element(
        solution.routes.begin(), solution.routes.end(),
        [](const Route& a, const Route& b) { return a.size() < b.size(); });
    if (longest->size() < 2) {
      throw Error(ErrorKind::kInvalidSolution,
                  "not enough tasks to give every route one");
    }
    route.push_back(longest->back());
    longest->pop_back();
  }
}

std::string ToString(const Solution& solution) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    if (k) out << ',';
    out << '[';
    for (std::size_t i = 0; i < solution.routes[k].size(); ++i) {
      if (i) out << ',';
      out << solution.routes[k][i];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace stcvrp
