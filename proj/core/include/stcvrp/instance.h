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

#ifndef STCVRP_INSTANCE_H_
#define STCVRP_INSTANCE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stcvrp/geometry.h"

namespace stcvrp {

// Node ids: 0 is the depot, tasks are 1..N.
using NodeId = int;
using VehicleId = int;

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct InstanceParams {
  std::string name;
  Point depot;
  std::vector<Point> tasks;
  int k_max = 1;
  double speed = 5.0;         // m/s
  double service_time = 8.0;  // s
  double w_max = 8.0;         // s
  double d_max = 150.0;       // m
};

// Immutable problem definition with its derived travel-time and separation
// matrices. Safe to share across threads once constructed.
class Instance {
 public:
  // Throws Error(kInvalidParameter) when an invariant does not hold.
  explicit Instance(InstanceParams params);

  const InstanceParams& params() const { return params_; }
  const std::string& name() const { return params_.name; }
  const Point& depot() const { return params_.depot; }
  std::span<const Point> tasks() const { return params_.tasks; }
  int num_tasks() const { return static_cast<int>(params_.tasks.size()); }
  int num_vehicles() const { return params_.k_max; }
  double speed() const { return params_.speed; }
  double service_time() const { return params_.service_time; }
  double w_max() const { return params_.w_max; }
  double d_max() const { return params_.d_max; }

  // Coordinates of node `id` (0 = depot). Throws Error(kIndex).
  const Point& node(NodeId id) const;

  // Travel time in seconds between nodes; throws Error(kIndex) on bad ids.
  double travel_time(NodeId i, NodeId j) const;
  // Unchecked variant for hot loops.
  double travel(NodeId i, NodeId j) const noexcept { return travel_(i, j); }

  // Required start separation between tasks i and j (1..N) when served by
  // different vehicles. Throws Error(kIndex) on bad ids.
  double separation(NodeId i, NodeId j) const;
  double sep(NodeId i, NodeId j) const noexcept { return separation_(i, j); }

  // (N+1)x(N+1), indexed by node id.
  const SquareMatrix& travel_matrix() const { return travel_; }
  // (N+1)x(N+1), indexed by node id; row/column 0 (depot) is zero.
  const SquareMatrix& separation_matrix() const { return separation_; }

  // Copies with one parameter changed; derived matrices are rebuilt.
  Instance WithDMax(double d_max) const;
  Instance WithVehicles(int k_max) const;

 private:
  void CheckNode(NodeId id) const;

  InstanceParams params_;
  SquareMatrix travel_;
  SquareMatrix separation_;
};

}  // namespace stcvrp

#endif  // STCVRP_INSTANCE_H_
