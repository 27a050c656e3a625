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

#include "stcvrp/json_io.h"

#include <string>

#include "stcvrp/error.h"

namespace stcvrp {

using nlohmann::json;

json SolutionToJson(const Solution& solution) {
  json routes = json::array();
  for (const Route& route : solution.routes) routes.push_back(route);
  return json{{"routes", routes}};
}

Solution SolutionFromJson(const json& input) {
  const json& routes =
      input.is_object() && input.contains("routes") ? input.at("routes") : input;
  if (!routes.is_array()) {
    throw Error(ErrorKind::kParse, "solution must be an array of routes");
  }
  Solution solution;
  for (const json& route : routes) {
    if (!route.is_array()) {
      throw Error(ErrorKind::kParse, "each route must be an array of task ids");
    }
    Route r;
    for (const json& task : route) {
      if (!task.is_number_integer()) {
        throw Error(ErrorKind::kParse, "task ids must be integers");
      }
      r.push_back(task.get<NodeId>());
    }
    solution.routes.push_back(std::move(r));
  }
  return solution;
}

json ScheduleToJson(const Schedule& schedule) {
  json tasks = json::array();
  for (std::size_t task = 1; task < schedule.start.size(); ++task) {
    tasks.push_back({{"task", task},
                     {"vehicle", schedule.vehicle_of[task] + 1},
                     {"arrival", schedule.arrival[task]},
                     {"wait", schedule.wait[task]},
                     {"start", schedule.start[task]},
                     {"end", schedule.end[task]}});
  }
  json vehicles = json::array();
  for (std::size_t k = 0; k < schedule.vehicle_completion.size(); ++k) {
    const VehicleStats& s = schedule.vehicle_stats[k];
    vehicles.push_back({{"vehicle", k + 1},
                        {"sweep", s.sweep_time},
                        {"wait", s.wait_time},
                        {"move", s.move_time},
                        {"completion", schedule.vehicle_completion[k]}});
  }
  return json{{"makespan", schedule.makespan},
              {"total_wait", schedule.total_wait},
              {"tasks", tasks},
              {"vehicles", vehicles}};
}

Schedule ScheduleFromJson(const json& input, const Instance& instance) {
  const auto slots = static_cast<std::size_t>(instance.num_tasks()) + 1;
  const auto k_max = static_cast<std::size_t>(instance.num_vehicles());
  Schedule schedule;
  schedule.arrival.assign(slots, 0.0);
  schedule.wait.assign(slots, 0.0);
  schedule.start.assign(slots, 0.0);
  schedule.end.assign(slots, 0.0);
  schedule.vehicle_of.assign(slots, -1);
  schedule.vehicle_completion.assign(k_max, 0.0);
  schedule.vehicle_stats.assign(k_max, {});
  try {
    std::vector<bool> seen(slots, false);
    for (const json& record : input.at("tasks")) {
      const auto task = record.at("task").get<long long>();
      if (task < 1 || static_cast<std::size_t>(task) >= slots) {
        throw Error(ErrorKind::kInvalidInput,
                    "schedule task id " + std::to_string(task) +
                        " outside the instance");
      }
      const auto slot = static_cast<std::size_t>(task);
      if (seen[slot]) {
        throw Error(ErrorKind::kInvalidInput,
                    "schedule lists task " + std::to_string(task) + " twice");
      }
      seen[slot] = true;
      schedule.vehicle_of[slot] = record.value("vehicle", 0) - 1;
      schedule.arrival[slot] = record.at("arrival").get<double>();
      schedule.wait[slot] = record.at("wait").get<double>();
      schedule.start[slot] = record.at("start").get<double>();
      schedule.end[slot] =
          record.value("end", schedule.start[slot] + instance.service_time());
    }
    for (std::size_t slot = 1; slot < slots; ++slot) {
      if (!seen[slot]) {
        throw Error(ErrorKind::kInvalidInput,
                    "schedule does not cover task " + std::to_string(slot));
      }
    }
    for (const json& record : input.at("vehicles")) {
      const auto vehicle = record.at("vehicle").get<long long>();
      if (vehicle < 1 || static_cast<std::size_t>(vehicle) > k_max) {
        throw Error(ErrorKind::kInvalidInput,
                    "schedule vehicle id " + std::to_string(vehicle) +
                        " outside the fleet");
      }
      const auto k = static_cast<std::size_t>(vehicle - 1);
      schedule.vehicle_stats[k] = {record.value("sweep", 0.0),
                                   record.value("wait", 0.0),
                                   record.value("move", 0.0)};
      schedule.vehicle_completion[k] = record.at("completion").get<double>();
    }
    schedule.makespan = input.at("makespan").get<double>();
    schedule.total_wait = input.value("total_wait", 0.0);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("schedule JSON: ") + e.what());
  }
  return schedule;
}

json ReportToJson(const ViolationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"kind", std::string(ViolationKindName(v.kind))},
                          {"task_a", v.task_a},
                          {"task_b", v.task_b},
                          {"vehicle", v.vehicle < 0 ? 0 : v.vehicle + 1},
                          {"position", v.position},
                          {"required", v.required},
                          {"observed", v.observed},
                          {"detail", v.detail}});
  }
  return json{{"feasible", report.feasible()},
              {"violations", violations},
              {"warnings", report.warnings}};
}

}  // namespace stcvrp
