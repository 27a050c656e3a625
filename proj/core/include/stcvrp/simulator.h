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

#ifndef STCVRP_SIMULATOR_H_
#define STCVRP_SIMULATOR_H_

#include <span>
#include <string_view>
#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/schedule.h"
#include "stcvrp/solution.h"

namespace stcvrp {

// Arrivals whose timestamps differ by at most this much are one batch.
inline constexpr double kBatchTolerance = 1e-9;

// Declaration order is the tie-break at equal timestamps.
enum class EventKind { kEndWork = 0, kStartWork = 1, kArrive = 2 };

std::string_view EventKindName(EventKind kind);

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::kArrive;
  VehicleId vehicle = 0;
};

// Total order used by the event queue: time, then kind, then vehicle.
bool EventBefore(const Event& a, const Event& b);

// A vehicle's current service window (start s_j, end e_j = s_j + w).
struct CommittedWindow {
  VehicleId vehicle = 0;
  NodeId task = 0;
  double start = 0.0;
  double end = 0.0;
};

struct EarliestStartResult {
  double start = 0.0;
  int passes = 0;  // full passes over the windows, the last one unchanged
};

// Earliest start for a vehicle arriving at `arrival` given the other
// vehicles' committed windows and the separation `required_gap[i]` between
// the arriving task and windows[i].task. Repeats full passes until the
// candidate stops moving; a window conflicts when |candidate - s_j| < g and
// pushes the candidate to max(candidate, min(s_j + g, e_j)).
EarliestStartResult EarliestStart(double arrival,
                                  std::span<const CommittedWindow> windows,
                                  std::span<const double> required_gap);

struct PendingArrival {
  VehicleId vehicle = 0;
  int tasks_completed = 0;
};

// Processing order for simultaneous arrivals: fewer completed tasks first,
// then lower vehicle id.
std::vector<VehicleId> BatchOrder(std::span<const PendingArrival> batch);

// Optional record of one evaluation, for tests and debugging.
struct EvaluationTrace {
  std::vector<Event> events;                   // in processing order
  std::vector<std::vector<VehicleId>> batches;  // arrival batches, sorted
  int max_passes = 0;                          // worst EarliestStart passes
  int max_windows = 0;                         // most windows consulted
};

// Event-driven evaluation of `solution`: vehicles leave the depot at time 0,
// simultaneous arrivals are resolved in BatchOrder, each start is the
// EarliestStart against the windows already committed by other vehicles.
// Empty routes are tolerated (completion 0). Throws Error(kInvalidSolution)
// if the routes are not a partition of the tasks.
Schedule Evaluate(const Instance& instance, const Solution& solution,
                  EvaluationTrace* trace = nullptr);

// Makespan only; same semantics as Evaluate().makespan.
double Makespan(const Instance& instance, const Solution& solution);

}  // namespace stcvrp

#endif  // STCVRP_SIMULATOR_H_
