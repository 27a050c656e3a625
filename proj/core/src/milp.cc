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

#include "stcvrp/milp.h"

#include <algorithm>
#include <sstream>

#include "stcvrp/construct.h"
#include "stcvrp/error.h"
#include "stcvrp/simulator.h"
#include "text_util.h"

namespace stcvrp {
namespace {

std::string Name(std::string_view prefix, std::initializer_list<int> ids) {
  std::string name(prefix);
  for (int id : ids) {
    name += '_';
    name += std::to_string(id);
  }
  return name;
}

class ModelBuilder {
 public:
  explicit ModelBuilder(MilpModel& model) : model_(model) {}

  std::size_t Add(std::string name, VarGroup group, bool binary) {
    model_.variables.push_back({std::move(name), group, binary});
    return model_.variables.size() - 1;
  }

  void Constrain(std::string name, ConstraintFamily family,
                 std::vector<LinearTerm> terms, Sense sense, double rhs) {
    model_.constraints.push_back(
        {std::move(name), family, std::move(terms), sense, rhs});
  }

 private:
  MilpModel& model_;
};

void AppendTerm(std::ostringstream& out, const LinearTerm& term,
                const MilpModel& model, bool first) {
  const double c = term.coefficient;
  if (!first) {
    out << (c < 0 ? "- " : "+ ");
  } else if (c < 0) {
    out << "- ";
  }
  const double magnitude = c < 0 ? -c : c;
  if (magnitude != 1.0) out << internal::FormatDouble(magnitude) << ' ';
  out << model.variables[term.variable].name;
}

}  // namespace

std::string_view ConstraintFamilyName(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::kAssignOnce: return "assign";
    case ConstraintFamily::kOutDegree: return "out";
    case ConstraintFamily::kInDegree: return "in";
    case ConstraintFamily::kFlowBalance: return "flow";
    case ConstraintFamily::kVehicleUse: return "use";
    case ConstraintFamily::kAllVehiclesUsed: return "used";
    case ConstraintFamily::kStartSplit: return "split";
    case ConstraintFamily::kPropagation: return "prop";
    case ConstraintFamily::kFirstArrival: return "first";
    case ConstraintFamily::kAbsDiffPositive: return "absp";
    case ConstraintFamily::kAbsDiffNegative: return "absn";
    case ConstraintFamily::kSameVehicleLink: return "same";
    case ConstraintFamily::kSeparationForward: return "sepf";
    case ConstraintFamily::kSeparationBackward: return "sepb";
    case ConstraintFamily::kCompletion: return "done";
    case ConstraintFamily::kMakespan: return "span";
  }
  return "unknown";
}

std::size_t MilpModel::CountVariables(VarGroup group) const {
  return static_cast<std::size_t>(
      std::count_if(variables.begin(), variables.end(),
                    [&](const MilpVariable& v) { return v.group == group; }));
}

std::size_t MilpModel::CountConstraints(ConstraintFamily family) const {
  return static_cast<std::size_t>(std::count_if(
      constraints.begin(), constraints.end(),
      [&](const MilpConstraint& c) { return c.family == family; }));
}

std::size_t ExpectedVariableCount(VarGroup group, int n_tasks, int k_vehicles) {
  const auto n = static_cast<std::size_t>(n_tasks);
  const auto k = static_cast<std::size_t>(k_vehicles);
  const std::size_t pairs = n * (n - 1) / 2;
  switch (group) {
    case VarGroup::kArc: return (n + 1) * n * k;
    case VarGroup::kAssign: return n * k;
    case VarGroup::kUse: return k;
    case VarGroup::kSameVehicle:
    case VarGroup::kOrder: return pairs;
    case VarGroup::kAbsDiff: return k * pairs;
    case VarGroup::kArrival:
    case VarGroup::kWait:
    case VarGroup::kStart: return n;
    case VarGroup::kCompletion: return k;
    case VarGroup::kMakespan: return 1;
  }
  return 0;
}

std::size_t ExpectedConstraintCount(ConstraintFamily family, int n_tasks,
                                    int k_vehicles) {
  const auto n = static_cast<std::size_t>(n_tasks);
  const auto k = static_cast<std::size_t>(k_vehicles);
  const std::size_t pairs = n * (n - 1) / 2;
  switch (family) {
    case ConstraintFamily::kAssignOnce: return n;
    case ConstraintFamily::kOutDegree:
    case ConstraintFamily::kInDegree:
    case ConstraintFamily::kFlowBalance: return n * k;
    case ConstraintFamily::kVehicleUse:
    case ConstraintFamily::kAllVehiclesUsed: return k;
    case ConstraintFamily::kStartSplit: return n;
    case ConstraintFamily::kPropagation: return n * (n - 1);
    case ConstraintFamily::kFirstArrival: return n;
    case ConstraintFamily::kAbsDiffPositive:
    case ConstraintFamily::kAbsDiffNegative: return k * pairs;
    case ConstraintFamily::kSameVehicleLink:
    case ConstraintFamily::kSeparationForward:
    case ConstraintFamily::kSeparationBackward: return pairs;
    case ConstraintFamily::kCompletion: return n * k;
    case ConstraintFamily::kMakespan: return k;
  }
  return 0;
}

double UpperBoundMakespan(const Instance& instance) {
  return Makespan(instance, NearestNeighborGreedy(instance)) +
         instance.w_max() + instance.service_time();
}

MilpModel BuildMilp(const Instance& instance, const MilpOptions& options) {
  return BuildMilp(instance, UpperBoundMakespan(instance), options);
}

MilpModel BuildMilp(const Instance& instance, double big_m,
                    const MilpOptions& options) {
  const double bound = UpperBoundMakespan(instance);
  if (!(big_m >= bound)) {
    throw Error(ErrorKind::kInvalidParameter,
                "big-M " + internal::FormatDouble(big_m) +
                    " is below the greedy makespan bound " +
                    internal::FormatDouble(bound));
  }
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  const double w = instance.service_time();
  const double m = big_m;

  MilpModel model;
  model.big_m = m;
  ModelBuilder builder(model);
  auto nodes = static_cast<std::size_t>(n) + 1;
  auto vehicles = static_cast<std::size_t>(k_max);

  // Variables. Vehicles are 1-based in names.
  std::vector<std::size_t> x(nodes * nodes * vehicles, 0);
  auto X = [&](int i, int j, int k) -> std::size_t& {
    return x[(static_cast<std::size_t>(i) * nodes + static_cast<std::size_t>(j)) *
                 vehicles +
             static_cast<std::size_t>(k - 1)];
  };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= k_max; ++k) {
        X(i, j, k) = builder.Add(Name("x", {i, j, k}), VarGroup::kArc, true);
      }
    }
  }
  std::vector<std::size_t> v(nodes * vehicles, 0);
  auto V = [&](int i, int k) -> std::size_t& {
    return v[static_cast<std::size_t>(i) * vehicles +
             static_cast<std::size_t>(k - 1)];
  };
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= k_max; ++k) {
      V(i, k) = builder.Add(Name("v", {i, k}), VarGroup::kAssign, true);
    }
  }
  std::vector<std::size_t> u(vehicles + 1, 0);
  for (int k = 1; k <= k_max; ++k) {
    u[static_cast<std::size_t>(k)] =
        builder.Add(Name("u", {k}), VarGroup::kUse, true);
  }
  std::vector<std::size_t> z(nodes * nodes, 0);
  auto Z = [&](int i, int j) -> std::size_t& {
    return z[static_cast<std::size_t>(i) * nodes + static_cast<std::size_t>(j)];
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Z(i, j) = builder.Add(Name("z", {i, j}), VarGroup::kSameVehicle, true);
    }
  }
  std::vector<std::size_t> y(nodes * nodes, 0);
  auto Y = [&](int i, int j) -> std::size_t& {
    return y[static_cast<std::size_t>(i) * nodes + static_cast<std::size_t>(j)];
  };
  if (options.order_binaries) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Y(i, j) = builder.Add(Name("y", {i, j}), VarGroup::kOrder, true);
      }
    }
  }
  std::vector<std::size_t> up(nodes * nodes * vehicles, 0);
  auto UP = [&](int i, int j, int k) -> std::size_t& {
    return up[(static_cast<std::size_t>(i) * nodes +
               static_cast<std::size_t>(j)) *
                  vehicles +
              static_cast<std::size_t>(k - 1)];
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= k_max; ++k) {
        UP(i, j, k) =
            builder.Add(Name("up", {i, j, k}), VarGroup::kAbsDiff, false);
      }
    }
  }
  std::vector<std::size_t> b(nodes), t(nodes), s(nodes);
  for (int i = 1; i <= n; ++i) {
    b[static_cast<std::size_t>(i)] =
        builder.Add(Name("b", {i}), VarGroup::kArrival, false);
  }
  for (int i = 1; i <= n; ++i) {
    t[static_cast<std::size_t>(i)] =
        builder.Add(Name("t", {i}), VarGroup::kWait, false);
  }
  for (int i = 1; i <= n; ++i) {
    s[static_cast<std::size_t>(i)] =
        builder.Add(Name("s", {i}), VarGroup::kStart, false);
  }
  std::vector<std::size_t> completion(vehicles + 1, 0);
  for (int k = 1; k <= k_max; ++k) {
    completion[static_cast<std::size_t>(k)] =
        builder.Add(Name("C", {k}), VarGroup::kCompletion, false);
  }
  model.objective = builder.Add("T", VarGroup::kMakespan, false);
  auto B = [&](int i) { return b[static_cast<std::size_t>(i)]; };
  auto S = [&](int i) { return s[static_cast<std::size_t>(i)]; };

  using CF = ConstraintFamily;
  for (int i = 1; i <= n; ++i) {
    std::vector<LinearTerm> terms;
    for (int k = 1; k <= k_max; ++k) terms.push_back({1.0, V(i, k)});
    builder.Constrain(Name("assign", {i}), CF::kAssignOnce, std::move(terms),
                      Sense::kEqual, 1.0);
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= k_max; ++k) {
      std::vector<LinearTerm> terms{{1.0, V(i, k)}};
      for (int j = 0; j <= n; ++j) {
        if (j != i) terms.push_back({-1.0, X(i, j, k)});
      }
      builder.Constrain(Name("out", {i, k}), CF::kOutDegree, std::move(terms),
                        Sense::kEqual, 0.0);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= k_max; ++k) {
      std::vector<LinearTerm> terms{{1.0, V(i, k)}};
      for (int j = 0; j <= n; ++j) {
        if (j != i) terms.push_back({-1.0, X(j, i, k)});
      }
      builder.Constrain(Name("in", {i, k}), CF::kInDegree, std::move(terms),
                        Sense::kEqual, 0.0);
    }
  }
  for (int h = 1; h <= n; ++h) {
    for (int k = 1; k <= k_max; ++k) {
      std::vector<LinearTerm> terms;
      for (int i = 0; i <= n; ++i) {
        if (i != h) terms.push_back({1.0, X(i, h, k)});
      }
      for (int j = 0; j <= n; ++j) {
        if (j != h) terms.push_back({-1.0, X(h, j, k)});
      }
      builder.Constrain(Name("flow", {h, k}), CF::kFlowBalance,
                        std::move(terms), Sense::kEqual, 0.0);
    }
  }
  for (int k = 1; k <= k_max; ++k) {
    std::vector<LinearTerm> terms{{1.0, u[static_cast<std::size_t>(k)]}};
    for (int j = 1; j <= n; ++j) terms.push_back({-1.0, X(0, j, k)});
    builder.Constrain(Name("use", {k}), CF::kVehicleUse, std::move(terms),
                      Sense::kEqual, 0.0);
  }
  for (int k = 1; k <= k_max; ++k) {
    builder.Constrain(Name("used", {k}), CF::kAllVehiclesUsed,
                      {{1.0, u[static_cast<std::size_t>(k)]}}, Sense::kEqual,
                      1.0);
  }
  for (int i = 1; i <= n; ++i) {
    builder.Constrain(Name("split", {i}), CF::kStartSplit,
                      {{1.0, S(i)}, {-1.0, B(i)},
                       {-1.0, t[static_cast<std::size_t>(i)]}},
                      Sense::kEqual, 0.0);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::vector<LinearTerm> terms{{1.0, B(j)}, {-1.0, S(i)}};
      for (int k = 1; k <= k_max; ++k) terms.push_back({-m, X(i, j, k)});
      builder.Constrain(Name("prop", {i, j}), CF::kPropagation,
                        std::move(terms), Sense::kGreaterEqual,
                        w + instance.travel(i, j) - m);
    }
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<LinearTerm> terms{{1.0, B(j)}};
    for (int k = 1; k <= k_max; ++k) terms.push_back({-m, X(0, j, k)});
    builder.Constrain(Name("first", {j}), CF::kFirstArrival, std::move(terms),
                      Sense::kGreaterEqual, instance.travel(0, j) - m);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= k_max; ++k) {
        builder.Constrain(Name("absp", {i, j, k}), CF::kAbsDiffPositive,
                          {{1.0, UP(i, j, k)}, {-1.0, V(i, k)}, {1.0, V(j, k)}},
                          Sense::kGreaterEqual, 0.0);
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= k_max; ++k) {
        builder.Constrain(Name("absn", {i, j, k}), CF::kAbsDiffNegative,
                          {{1.0, UP(i, j, k)}, {-1.0, V(j, k)}, {1.0, V(i, k)}},
                          Sense::kGreaterEqual, 0.0);
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<LinearTerm> terms{{2.0, Z(i, j)}};
      for (int k = 1; k <= k_max; ++k) terms.push_back({1.0, UP(i, j, k)});
      builder.Constrain(Name("same", {i, j}), CF::kSameVehicleLink,
                        std::move(terms), Sense::kEqual, 2.0);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<LinearTerm> terms{{1.0, S(j)}, {-1.0, S(i)}, {m, Z(i, j)}};
      double rhs = instance.sep(i, j);
      if (options.order_binaries) {
        terms.push_back({-m, Y(i, j)});
        rhs -= m;
      }
      builder.Constrain(Name("sepf", {i, j}), CF::kSeparationForward,
                        std::move(terms), Sense::kGreaterEqual, rhs);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<LinearTerm> terms{{1.0, S(i)}, {-1.0, S(j)}, {m, Z(i, j)}};
      if (options.order_binaries) terms.push_back({m, Y(i, j)});
      builder.Constrain(Name("sepb", {i, j}), CF::kSeparationBackward,
                        std::move(terms), Sense::kGreaterEqual,
                        instance.sep(i, j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= k_max; ++k) {
      builder.Constrain(Name("done", {i, k}), CF::kCompletion,
                        {{1.0, completion[static_cast<std::size_t>(k)]},
                         {-1.0, S(i)},
                         {-m, X(i, 0, k)}},
                        Sense::kGreaterEqual, w + instance.travel(i, 0) - m);
    }
  }
  for (int k = 1; k <= k_max; ++k) {
    builder.Constrain(Name("span", {k}), CF::kMakespan,
                      {{1.0, model.objective},
                       {-1.0, completion[static_cast<std::size_t>(k)]}},
                      Sense::kGreaterEqual, 0.0);
  }
  return model;
}

std::string ToLpText(const MilpModel& model, std::string_view comment) {
  constexpr std::size_t kTermsPerLine = 8;
  std::ostringstream out;
  for (std::string_view line : internal::SplitLines(comment)) {
    out << "\\ " << line << '\n';
  }
  out << "Minimize\n obj: " << model.variables[model.objective].name << '\n';
  out << "Subject To\n";
  for (const MilpConstraint& c : model.constraints) {
    out << ' ' << c.name << ':';
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      if (i > 0 && i % kTermsPerLine == 0) out << "\n   ";
      out << ' ';
      AppendTerm(out, c.terms[i], model, i == 0);
    }
    switch (c.sense) {
      case Sense::kLessEqual: out << " <= "; break;
      case Sense::kGreaterEqual: out << " >= "; break;
      case Sense::kEqual: out << " = "; break;
    }
    out << internal::FormatDouble(c.rhs) << '\n';
  }
  // Continuous variables keep the default [0, +inf) bounds; binaries are
  // declared below.
  out << "Bounds\n";
  for (const MilpVariable& var : model.variables) {
    if (!var.binary) out << ' ' << var.name << " >= 0\n";
  }
  out << "Binaries\n";
  std::size_t on_line = 0;
  for (const MilpVariable& var : model.variables) {
    if (!var.binary) continue;
    out << ' ' << var.name;
    if (++on_line == kTermsPerLine) {
      out << '\n';
      on_line = 0;
    }
  }
  if (on_line != 0) out << '\n';
  out << "End\n";
  return out.str();
}

std::map<std::string, double> ReadSolutionValues(std::string_view text) {
  std::map<std::string, double> values;
  for (std::string_view line : internal::SplitLines(text)) {
    const auto tokens = internal::SplitWhitespace(line);
    if (tokens.size() != 2 || tokens[0].front() == '#') continue;
    if (const auto value = internal::ParseDouble(tokens[1])) {
      values[std::string(tokens[0])] = *value;
    }
  }
  return values;
}

std::pair<Solution, Schedule> ScheduleFromMilpValues(
    const Instance& instance, const std::map<std::string, double>& values) {
  const int n = instance.num_tasks();
  const int k_max = instance.num_vehicles();
  auto value = [&](const std::string& name) {
    const auto it = values.find(name);
    return it == values.end() ? 0.0 : it->second;
  };
  auto arc = [&](int i, int j, int k) {
    return value(Name("x", {i, j, k})) > 0.5;
  };

  Solution solution;
  solution.routes.resize(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    Route& route = solution.routes[static_cast<std::size_t>(k - 1)];
    int current = 0;
    for (int steps = 0; steps <= n; ++steps) {
      int next = -1;
      for (int j = 0; j <= n; ++j) {
        if (j != current && arc(current, j, k)) {
          next = j;
          break;
        }
      }
      if (next <= 0) break;
      route.push_back(next);
      current = next;
    }
  }
  CheckPartition(solution, instance);

  const auto slots = static_cast<std::size_t>(n) + 1;
  Schedule schedule;
  schedule.arrival.assign(slots, 0.0);
  schedule.wait.assign(slots, 0.0);
  schedule.start.assign(slots, 0.0);
  schedule.end.assign(slots, 0.0);
  schedule.vehicle_of.assign(slots, -1);
  schedule.vehicle_completion.assign(static_cast<std::size_t>(k_max), 0.0);
  schedule.vehicle_stats.assign(static_cast<std::size_t>(k_max), {});
  for (int i = 1; i <= n; ++i) {
    const auto slot = static_cast<std::size_t>(i);
    schedule.arrival[slot] = value(Name("b", {i}));
    schedule.wait[slot] = value(Name("t", {i}));
    schedule.start[slot] = value(Name("s", {i}));
    schedule.end[slot] = schedule.start[slot] + instance.service_time();
    schedule.total_wait += schedule.wait[slot];
  }
  for (int k = 1; k <= k_max; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    const Route& route = solution.routes[idx];
    VehicleStats& stats = schedule.vehicle_stats[idx];
    NodeId prev = 0;
    for (NodeId task : route) {
      schedule.vehicle_of[static_cast<std::size_t>(task)] = k - 1;
      stats.move_time += instance.travel(prev, task);
      stats.wait_time += schedule.wait[static_cast<std::size_t>(task)];
      prev = task;
    }
    stats.move_time += instance.travel(prev, 0);
    stats.sweep_time = static_cast<double>(route.size()) * instance.service_time();
    schedule.vehicle_completion[idx] = value(Name("C", {k}));
  }
  schedule.makespan = *std::max_element(schedule.vehicle_completion.begin(),
                                        schedule.vehicle_completion.end());
  return {std::move(solution), std::move(schedule)};
}

}  // namespace stcvrp
