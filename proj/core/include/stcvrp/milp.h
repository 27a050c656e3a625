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

#ifndef STCVRP_MILP_H_
#define STCVRP_MILP_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/schedule.h"
#include "stcvrp/solution.h"

namespace stcvrp {

enum class VarGroup {
  kArc,          // x_i_j_k   binary, vehicle k drives i -> j
  kAssign,       // v_i_k     binary, task i served by k
  kUse,          // u_k       binary, vehicle k used
  kSameVehicle,  // z_i_j     binary, i < j share a vehicle
  kOrder,        // y_i_j     binary, s_i precedes s_j (ordered variant only)
  kAbsDiff,      // up_i_j_k  continuous >= |v_i_k - v_j_k|
  kArrival,      // b_i
  kWait,         // t_i
  kStart,        // s_i
  kCompletion,   // C_k
  kMakespan,     // T
};

enum class ConstraintFamily {
  kAssignOnce,          // sum_k v_ik = 1
  kOutDegree,           // v_ik = sum_j x_ijk
  kInDegree,            // v_ik = sum_j x_jik
  kFlowBalance,         // in(h,k) = out(h,k)
  kVehicleUse,          // u_k = sum_j x_0jk
  kAllVehiclesUsed,     // u_k = 1
  kStartSplit,          // s_i = b_i + t_i
  kPropagation,         // b_j >= s_i + w + c_ij - M(1 - sum_k x_ijk)
  kFirstArrival,        // b_j >= c_0j - M(1 - sum_k x_0jk)
  kAbsDiffPositive,     // up_ijk >= v_ik - v_jk
  kAbsDiffNegative,     // up_ijk >= v_jk - v_ik
  kSameVehicleLink,     // 2(1 - z_ij) = sum_k up_ijk
  kSeparationForward,   // s_j - s_i >= g_ij - M z_ij [- M(1 - y_ij)]
  kSeparationBackward,  // s_i - s_j >= g_ij - M z_ij [- M y_ij]
  kCompletion,          // C_k >= s_i + w + c_i0 - M(1 - x_i0k)
  kMakespan,            // T >= C_k
};
inline constexpr int kConstraintFamilyCount = 16;

std::string_view ConstraintFamilyName(ConstraintFamily family);

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct MilpVariable {
  std::string name;
  VarGroup group;
  bool binary = false;
};

struct LinearTerm {
  double coefficient = 0.0;
  std::size_t variable = 0;
};

struct MilpConstraint {
  std::string name;
  ConstraintFamily family;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::kEqual;
  double rhs = 0.0;
};

// Full makespan-minimization model over an instance, variables and
// constraints in a fixed deterministic order.
struct MilpModel {
  std::vector<MilpVariable> variables;
  std::vector<MilpConstraint> constraints;
  std::size_t objective = 0;  // index of T
  double big_m = 0.0;

  std::size_t CountVariables(VarGroup group) const;
  std::size_t CountConstraints(ConstraintFamily family) const;
};

struct MilpOptions {
  // Literal separation rows require both s_j - s_i >= g and s_i - s_j >= g
  // when z_ij = 0, which no schedule satisfies for g > 0. The ordered
  // variant adds y_ij so exactly one of the two rows is active.
  bool order_binaries = true;
};

// Closed-form sizes for N tasks and K vehicles (kOrder: ordered variant).
std::size_t ExpectedVariableCount(VarGroup group, int n, int k);
std::size_t ExpectedConstraintCount(ConstraintFamily family, int n, int k);

// Simulated makespan of the nearest-neighbor greedy solution plus
// w_max + service_time of slack; used as the big-M constant.
double UpperBoundMakespan(const Instance& instance);

// Throws Error(kInvalidParameter) if big_m < UpperBoundMakespan(instance).
MilpModel BuildMilp(const Instance& instance, double big_m,
                    const MilpOptions& options = {});
MilpModel BuildMilp(const Instance& instance, const MilpOptions& options = {});

// CPLEX LP text: Minimize / Subject To / Bounds / Binaries / End.
std::string ToLpText(const MilpModel& model, std::string_view comment = {});

// Reads "name value" lines; other lines are ignored.
std::map<std::string, double> ReadSolutionValues(std::string_view text);

// Routes from the arc variables (> 0.5) and times from b/t/s/C of a MILP
// solution. Throws Error(kInvalidSolution) if the arcs do not form K
// depot tours.
std::pair<Solution, Schedule> ScheduleFromMilpValues(
    const Instance& instance, const std::map<std::string, double>& values);

}  // namespace stcvrp

#endif  // STCVRP_MILP_H_
