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

#include "stcvrp/instance.h"

#include <cmath>
#include <string>
#include <utility>

#include "stcvrp/error.h"

namespace stcvrp {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::kInvalidParameter, message);
}

bool Finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

Instance::Instance(InstanceParams params) : params_(std::move(params)) {
  const int n = num_tasks();
  Require(params_.k_max >= 1, "k_max must be >= 1");
  Require(n >= params_.k_max,
          "every vehicle must serve a task: N=" + std::to_string(n) +
              " < k_max=" + std::to_string(params_.k_max));
  Require(std::isfinite(params_.speed) && params_.speed > 0.0,
          "speed must be > 0");
  Require(std::isfinite(params_.service_time) && params_.service_time >= 0.0,
          "service_time must be >= 0");
  Require(std::isfinite(params_.w_max) && params_.w_max >= 0.0,
          "w_max must be >= 0");
  Require(std::isfinite(params_.d_max) && params_.d_max > 0.0,
          "d_max must be > 0");
  Require(Finite(params_.depot), "depot coordinates must be finite");
  for (const Point& p : params_.tasks) {
    Require(Finite(p), "task coordinates must be finite");
  }

  const auto nodes = static_cast<std::size_t>(n) + 1;
  travel_ = SquareMatrix(nodes);
  separation_ = SquareMatrix(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) {
      const double d = Distance(node(static_cast<NodeId>(i)),
                                node(static_cast<NodeId>(j)));
      travel_(i, j) = travel_(j, i) = d / params_.speed;
      if (i > 0) {
        separation_(i, j) = separation_(j, i) =
            SlipTime(d, params_.w_max, params_.d_max);
      }
    }
    if (i > 0) separation_(i, i) = params_.w_max;
  }
}

const Point& Instance::node(NodeId id) const {
  CheckNode(id);
  return id == 0 ? params_.depot
                 : params_.tasks[static_cast<std::size_t>(id - 1)];
}

double Instance::travel_time(NodeId i, NodeId j) const {
  CheckNode(i);
  CheckNode(j);
  return travel_(i, j);
}

double Instance::separation(NodeId i, NodeId j) const {
  if (i < 1 || i > num_tasks() || j < 1 || j > num_tasks()) {
    throw Error(ErrorKind::kIndex, "separation defined for task ids 1.." +
                                       std::to_string(num_tasks()));
  }
  return separation_(i, j);
}

Instance Instance::WithDMax(double d_max) const {
  InstanceParams p = params_;
  p.d_max = d_max;
  return Instance(std::move(p));
}

Instance Instance::WithVehicles(int k_max) const {
  InstanceParams p = params_;
  p.k_max = k_max;
  return Instance(std::move(p));
}

void Instance::CheckNode(NodeId id) const {
  if (id < 0 || id > num_tasks()) {
    throw Error(ErrorKind::kIndex, "node id " + std::to_string(id) +
                                       " outside 0.." +
                                       std::to_string(num_tasks()));
  }
}

}  // namespace stcvrp
