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

#ifndef STCVRP_VALIDATE_H_
#define STCVRP_VALIDATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/schedule.h"
#include "stcvrp/solution.h"

namespace stcvrp {

// Absolute slack, in seconds, allowed by every feasibility check.
inline constexpr double kFeasibilityTolerance = 1e-6;

enum class ViolationKind { kPartition, kPropagation, kSeparation, kCompletion };

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::kPartition;
  NodeId task_a = 0;        // offending task (or first of a pair)
  NodeId task_b = 0;        // second task of a pair / successor, 0 if none
  VehicleId vehicle = -1;   // route concerned, -1 if not route-specific
  int position = -1;        // position within the route, -1 if n/a
  double required = 0.0;    // bound that should hold
  double observed = 0.0;    // value found in the schedule
  std::string detail;
};

struct ViolationReport {
  std::vector<Violation> violations;
  // Configuration notes that do not make the schedule infeasible.
  std::vector<std::string> warnings;

  bool feasible() const { return violations.empty(); }
};

// Independent check of a schedule against the routing and timing rules:
//  - the solution is a partition of 1..N into K non-empty routes;
//  - along each route, arrival >= previous start + service + travel (first
//    task: arrival >= depot travel), start = arrival + wait, wait >= 0;
//  - tasks on different vehicles start at least g(i,j) apart;
//  - each completion covers the last task plus the depot return, and the
//    makespan is the largest completion.
// Throws Error(kInvalidInput) when the schedule's vectors do not match the
// instance dimensions.
ViolationReport ValidateSchedule(const Instance& instance,
                                 const Solution& solution,
                                 const Schedule& schedule,
                                 double tolerance = kFeasibilityTolerance);

std::string Describe(const Violation& violation);

}  // namespace stcvrp

#endif  // STCVRP_VALIDATE_H_
