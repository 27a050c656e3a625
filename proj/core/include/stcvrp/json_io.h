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

#ifndef STCVRP_JSON_IO_H_
#define STCVRP_JSON_IO_H_

#include <json.hpp>

#include "stcvrp/instance.h"
#include "stcvrp/schedule.h"
#include "stcvrp/solution.h"
#include "stcvrp/validate.h"

namespace stcvrp {

// {"routes": [[1,2],[3]]}
nlohmann::json SolutionToJson(const Solution& solution);
// Accepts {"routes": [...]} or a bare array of routes.
Solution SolutionFromJson(const nlohmann::json& json);

// {"makespan", "total_wait",
//  "tasks":    [{"task","vehicle","arrival","wait","start","end"}...],
//  "vehicles": [{"vehicle","sweep","wait","move","completion"}...]}
// Vehicle ids are 1-based in JSON, matching the route order.
nlohmann::json ScheduleToJson(const Schedule& schedule);
Schedule ScheduleFromJson(const nlohmann::json& json, const Instance& instance);

nlohmann::json ReportToJson(const ViolationReport& report);

}  // namespace stcvrp

#endif  // STCVRP_JSON_IO_H_
