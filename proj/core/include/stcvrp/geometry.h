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

#ifndef STCVRP_GEOMETRY_H_
#define STCVRP_GEOMETRY_H_

#include <span>
#include <vector>

namespace stcvrp {

// Planar coordinates in meters.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double Distance(const Point& a, const Point& b);

// Minimum start-time separation (seconds) between two sweeps by different
// vehicles whose task points are `distance` meters apart. Linear from
// `w_max` at distance 0 down to 0 at `d_max`, and 0 beyond.
double SlipTime(double distance, double w_max, double d_max);

// Mean over points of the distance to the nearest other point. Requires at
// least two points.
double AvgNearestNeighborDistance(std::span<const Point> points);

Point Centroid(std::span<const Point> points);

}  // namespace stcvrp

#endif  // STCVRP_GEOMETRY_H_
