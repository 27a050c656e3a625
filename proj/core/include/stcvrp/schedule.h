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

#ifndef STCVRP_SCHEDULE_H_
#define STCVRP_SCHEDULE_H_

#include <vector>

#include "stcvrp/instance.h"

namespace stcvrp {

// Per-vehicle decomposition of the completion time: C = sweep + wait + move.
struct VehicleStats {
  double sweep_time = 0.0;  // tasks served * service time
  double wait_time = 0.0;   // waits accrued at task points
  double move_time = 0.0;   // all travel legs, depot return included
};

// Timetable of a solution. Per-task vectors have N+1 entries indexed by
// task id; slot 0 (the depot) is unused.
struct Schedule {
  std::vector<double> arrival;
  std::vector<double> wait;
  std::vector<double> start;
  std::vector<double> end;
  std::vector<VehicleId> vehicle_of;

  std::vector<double> vehicle_completion;
  std::vector<VehicleStats> vehicle_stats;
  double makespan = 0.0;
  double total_wait = 0.0;
};

}  // namespace stcvrp

#endif  // STCVRP_SCHEDULE_H_
