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

#include "stcvrp/validate.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stcvrp/error.h"

namespace stcvrp {

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kPartition:
      return "partition";
    case ViolationKind::kPropagation:
      return "propagation";
    case ViolationKind::kSeparation:
      return "separation";
    case ViolationKind::kCompletion:
      return "completion";
  }
  return "unknown";
}

ViolationReport ValidateSchedule(const Instance& instance,
                                 const Solution& solution,
                                 const Schedule& schedule, double tolerance) {
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  const auto task_slots = static_cast<std::size_t>(n) + 1;
  if (schedule.arrival.size() != task_slots ||
      schedule.wait.size() != task_slots ||
      schedule.start.size() != task_slots ||
      schedule.vehicle_completion.size() != static_cast<std::size_t>(k_max)) {
    throw Error(ErrorKind::kInvalidInput,
                "schedule dimensions do not match the instance (N=" +
                    std::to_string(n) + ", K=" + std::to_string(k_max) + ")");
  }
  if (static_cast<int>(solution.routes.size()) != k_max) {
    throw Error(ErrorKind::kInvalidInput,
                "solution has " + std::to_string(solution.routes.size()) +
                    " routes for " + std::to_string(k_max) + " vehicles");
  }

  ViolationReport report;
  if (instance.service_time() < instance.w_max()) {
    report.warnings.push_back(
        "service_time < w_max: the scheduler's start-time push is capped at "
        "the conflicting window's end, so separation may not be attainable");
  }

  if (auto problem = PartitionProblem(solution, n, k_max)) {
    Violation v;
    v.kind = ViolationKind::kPartition;
    v.detail = *problem;
    report.violations.push_back(std::move(v));
    // Timing checks need every task id to be in range and unique.
    if (PartitionProblem(solution, n, k_max, /*allow_empty_routes=*/true)) {
      return report;
    }
  }

  const double w = instance.service_time();
  std::vector<VehicleId> owner(task_slots, -1);

  for (int k = 0; k < k_max; ++k) {
    const Route& route = solution.routes[static_cast<std::size_t>(k)];
    NodeId prev = 0;
    for (std::size_t pos = 0; pos < route.size(); ++pos) {
      const NodeId task = route[pos];
      owner[static_cast<std::size_t>(task)] = k;
      const double b = schedule.arrival[static_cast<std::size_t>(task)];
      const double t = schedule.wait[static_cast<std::size_t>(task)];
      const double s = schedule.start[static_cast<std::size_t>(task)];
      const double earliest =
          prev == 0 ? instance.travel(0, task)
                    : schedule.start[static_cast<std::size_t>(prev)] + w +
                          instance.travel(prev, task);
      auto propagation = [&](double required, double observed,
                             std::string detail) {
        Violation v;
        v.kind = ViolationKind::kPropagation;
        v.task_a = prev;
        v.task_b = task;
        v.vehicle = k;
        v.position = static_cast<int>(pos);
        v.required = required;
        v.observed = observed;
        v.detail = std::move(detail);
        report.violations.push_back(std::move(v));
      };
      if (b < earliest - tolerance) {
        propagation(earliest, b, "arrival earlier than reachable");
      }
      if (t < -tolerance) propagation(0.0, t, "negative wait");
      if (std::abs(s - (b + t)) > tolerance) {
        propagation(b + t, s, "start != arrival + wait");
      }
      prev = task;
    }

    const double completion =
        schedule.vehicle_completion[static_cast<std::size_t>(k)];
    const double needed =
        route.empty() ? 0.0
                      : schedule.start[static_cast<std::size_t>(prev)] + w +
                            instance.travel(prev, 0);
    if (completion < needed - tolerance) {
      Violation v;
      v.kind = ViolationKind::kCompletion;
      v.task_a = prev;
      v.vehicle = k;
      v.required = needed;
      v.observed = completion;
      v.detail = "completion earlier than last service plus depot return";
      report.violations.push_back(std::move(v));
    }
  }

  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (owner[static_cast<std::size_t>(i)] ==
          owner[static_cast<std::size_t>(j)]) {
        continue;
      }
      const double gap = std::abs(schedule.start[static_cast<std::size_t>(i)] -
                                  schedule.start[static_cast<std::size_t>(j)]);
      const double required = instance.sep(i, j);
      if (gap < required - tolerance) {
        Violation v;
        v.kind = ViolationKind::kSeparation;
        v.task_a = i;
        v.task_b = j;
        v.required = required;
        v.observed = gap;
        v.detail = "start times closer than the slip-time rule allows";
        report.violations.push_back(std::move(v));
      }
    }
  }

  const double max_completion =
      k_max == 0 ? 0.0
                 : *std::max_element(schedule.vehicle_completion.begin(),
                                     schedule.vehicle_completion.end());
  if (std::abs(schedule.makespan - max_completion) > tolerance) {
    Violation v;
    v.kind = ViolationKind::kCompletion;
    v.required = max_completion;
    v.observed = schedule.makespan;
    v.detail = "makespan differs from the largest vehicle completion";
    report.violations.push_back(std::move(v));
  }
  return report;
}

std::string Describe(const Violation& violation) {
  std::ostringstream out;
  out.precision(10);
  out << ViolationKindName(violation.kind);
  if (violation.vehicle >= 0) out << " vehicle=" << violation.vehicle;
  if (violation.position >= 0) out << " position=" << violation.position;
  if (violation.task_a > 0) out << " task=" << violation.task_a;
  if (violation.task_b > 0) out << " other=" << violation.task_b;
  if (violation.kind != ViolationKind::kPartition) {
    out << " required=" << violation.required
        << " observed=" << violation.observed;
  }
  if (!violation.detail.empty()) out << " (" << violation.detail << ')';
  return out.str();
}

}  // namespace stcvrp
