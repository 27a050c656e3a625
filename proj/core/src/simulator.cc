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

#include "stcvrp/simulator.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "stcvrp/error.h"

namespace stcvrp {
namespace {

struct EventLater {
  bool operator()(const Event& a, const Event& b) const {
    return EventBefore(b, a);
  }
};

struct VehicleState {
  std::size_t cursor = 0;  // index of the current task in the route
  int tasks_completed = 0;
  bool has_window = false;
  bool working = false;
  CommittedWindow window;
  double wait = 0.0;
  double move = 0.0;
};

}  // namespace

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kEndWork:
      return "END_WORK";
    case EventKind::kStartWork:
      return "START_WORK";
    case EventKind::kArrive:
      return "ARRIVE";
  }
  return "UNKNOWN";
}

bool EventBefore(const Event& a, const Event& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.vehicle < b.vehicle;
}

EarliestStartResult EarliestStart(double arrival,
                                  std::span<const CommittedWindow> windows,
                                  std::span<const double> required_gap) {
  if (windows.size() != required_gap.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "one separation value is needed per committed window");
  }
  EarliestStartResult result{arrival, 0};
  double previous = 0.0;
  do {
    previous = result.start;
    ++result.passes;
    for (std::size_t i = 0; i < windows.size(); ++i) {
      const double gap = required_gap[i];
      if (std::abs(result.start - windows[i].start) < gap) {
        result.start = std::max(
            result.start, std::min(windows[i].start + gap, windows[i].end));
      }
    }
  } while (result.start != previous);
  return result;
}

std::vector<VehicleId> BatchOrder(std::span<const PendingArrival> batch) {
  std::vector<PendingArrival> sorted(batch.begin(), batch.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const PendingArrival& a, const PendingArrival& b) {
              if (a.tasks_completed != b.tasks_completed) {
                return a.tasks_completed < b.tasks_completed;
              }
              return a.vehicle < b.vehicle;
            });
  std::vector<VehicleId> order;
  order.reserve(sorted.size());
  for (const PendingArrival& p : sorted) order.push_back(p.vehicle);
  return order;
}

Schedule Evaluate(const Instance& instance, const Solution& solution,
                  EvaluationTrace* trace) {
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  if (auto problem = PartitionProblem(solution, n, k_max,
                                      /*allow_empty_routes=*/true)) {
    throw Error(ErrorKind::kInvalidSolution, *problem);
  }
  const double w = instance.service_time();
  const double g_max = instance.w_max();
  const auto slots = static_cast<std::size_t>(n) + 1;

  Schedule schedule;
  schedule.arrival.assign(slots, 0.0);
  schedule.wait.assign(slots, 0.0);
  schedule.start.assign(slots, 0.0);
  schedule.end.assign(slots, 0.0);
  schedule.vehicle_of.assign(slots, -1);
  schedule.vehicle_completion.assign(static_cast<std::size_t>(k_max), 0.0);
  schedule.vehicle_stats.assign(static_cast<std::size_t>(k_max), {});

  std::vector<VehicleState> vehicles(static_cast<std::size_t>(k_max));
  std::priority_queue<Event, std::vector<Event>, EventLater> queue;
  for (VehicleId k = 0; k < k_max; ++k) {
    const Route& route = solution.routes[static_cast<std::size_t>(k)];
    for (NodeId task : route) schedule.vehicle_of[task] = k;
    if (route.empty()) continue;
    const double leg = instance.travel(0, route.front());
    vehicles[static_cast<std::size_t>(k)].move = leg;
    queue.push({leg, EventKind::kArrive, k});
  }

  std::vector<Event> deferred;
  std::vector<PendingArrival> batch;
  std::vector<double> batch_time(static_cast<std::size_t>(k_max), 0.0);
  std::vector<CommittedWindow> windows;
  std::vector<double> gaps;
  windows.reserve(static_cast<std::size_t>(k_max));
  gaps.reserve(static_cast<std::size_t>(k_max));

  while (!queue.empty()) {
    const Event event = queue.top();
    queue.pop();
    if (trace) trace->events.push_back(event);
    VehicleState& state = vehicles[static_cast<std::size_t>(event.vehicle)];
    const Route& route = solution.routes[static_cast<std::size_t>(event.vehicle)];

    switch (event.kind) {
      case EventKind::kArrive: {
        batch.clear();
        deferred.clear();
        batch.push_back({event.vehicle, state.tasks_completed});
        batch_time[static_cast<std::size_t>(event.vehicle)] = event.time;
        while (!queue.empty() &&
               queue.top().time - event.time <= kBatchTolerance) {
          const Event other = queue.top();
          queue.pop();
          if (other.kind == EventKind::kArrive) {
            if (trace) trace->events.push_back(other);
            batch.push_back(
                {other.vehicle,
                 vehicles[static_cast<std::size_t>(other.vehicle)]
                     .tasks_completed});
            batch_time[static_cast<std::size_t>(other.vehicle)] = other.time;
          } else {
            deferred.push_back(other);
          }
        }
        for (const Event& other : deferred) queue.push(other);

        const std::vector<VehicleId> order = BatchOrder(batch);
        if (trace) trace->batches.push_back(order);
        for (VehicleId v : order) {
          VehicleState& vs = vehicles[static_cast<std::size_t>(v)];
          const NodeId task =
              solution.routes[static_cast<std::size_t>(v)][vs.cursor];
          const double arrival = batch_time[static_cast<std::size_t>(v)];

          windows.clear();
          gaps.clear();
          for (VehicleId j = 0; j < k_max; ++j) {
            const VehicleState& other = vehicles[static_cast<std::size_t>(j)];
            if (j == v || !other.has_window) continue;
            // Windows that started more than g_max ago can never conflict.
            if (other.window.start + g_max <= arrival) continue;
            windows.push_back(other.window);
            gaps.push_back(instance.sep(task, other.window.task));
          }
          const EarliestStartResult found =
              EarliestStart(arrival, windows, gaps);
          if (trace) {
            trace->max_passes = std::max(trace->max_passes, found.passes);
            trace->max_windows = std::max(
                trace->max_windows, static_cast<int>(windows.size()));
          }

          const double wait = found.start - arrival;
          vs.has_window = true;
          vs.window = {v, task, found.start, found.start + w};
          vs.wait += wait;
          const auto slot = static_cast<std::size_t>(task);
          schedule.arrival[slot] = arrival;
          schedule.wait[slot] = wait;
          schedule.start[slot] = found.start;
          schedule.end[slot] = found.start + w;
          queue.push({found.start, EventKind::kStartWork, v});
        }
        break;
      }
      case EventKind::kStartWork:
        state.working = true;
        queue.push({event.time + w, EventKind::kEndWork, event.vehicle});
        break;
      case EventKind::kEndWork: {
        state.working = false;
        ++state.tasks_completed;
        const NodeId done = route[state.cursor];
        ++state.cursor;
        if (state.cursor < route.size()) {
          const double leg = instance.travel(done, route[state.cursor]);
          state.move += leg;
          queue.push({event.time + leg, EventKind::kArrive, event.vehicle});
        } else {
          state.move += instance.travel(done, 0);
        }
        break;
      }
    }
  }

  for (VehicleId k = 0; k < k_max; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const VehicleState& state = vehicles[idx];
    VehicleStats& stats = schedule.vehicle_stats[idx];
    const Route& route = solution.routes[idx];
    if (route.empty()) continue;
    stats.sweep_time = static_cast<double>(route.size()) * w;
    stats.wait_time = state.wait;
    stats.move_time = state.move;
    schedule.vehicle_completion[idx] =
        stats.sweep_time + stats.wait_time + stats.move_time;
    schedule.makespan =
        std::max(schedule.makespan, schedule.vehicle_completion[idx]);
  }
  for (NodeId task = 1; task <= n; ++task) {
    schedule.total_wait += schedule.wait[static_cast<std::size_t>(task)];
  }
  return schedule;
}

double Makespan(const Instance& instance, const Solution& solution) {
  return Evaluate(instance, solution).makespan;
}

}  // namespace stcvrp
