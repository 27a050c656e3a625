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

#ifndef STCVRP_SOLUTION_H_
#define STCVRP_SOLUTION_H_

#include <optional>
#include <string>
#include <vector>

#include "stcvrp/instance.h"

namespace stcvrp {

using Route = std::vector<NodeId>;

// One ordered task list per vehicle; routes[k] belongs to vehicle k.
struct Solution {
  std::vector<Route> routes;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Describes the first partition problem found, or nullopt when `solution`
// covers 1..num_tasks exactly once with num_vehicles routes. Empty routes
// are reported only when `allow_empty_routes` is false.
std::optional<std::string> PartitionProblem(const Solution& solution,
                                            int num_tasks, int num_vehicles,
                                            bool allow_empty_routes = false);

// Throws Error(kInvalidSolution) carrying PartitionProblem's message.
void CheckPartition(const Solution& solution, const Instance& instance,
                    bool allow_empty_routes = false);

// Routes concatenated in vehicle order.
std::vector<NodeId> Flatten(const Solution& solution);
std::vector<std::size_t> RouteSizes(const Solution& solution);
// Inverse of Flatten given the route sizes.
Solution Split(const std::vector<NodeId>& permutation,
               const std::vector<std::size_t>& sizes);

// Moves tasks until no route is empty: each empty route takes the last task
// of the currently longest route (lowest index on ties).
void RepairEmptyRoutes(Solution& solution);

std::string ToString(const Solution& solution);

}  // namespace stcvrp

#endif  // STCVRP_SOLUTION_H_
