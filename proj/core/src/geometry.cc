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

#include "stcvrp/geometry.h"

#include <cmath>
#include <limits>
#include <string>

#include "stcvrp/error.h"

namespace stcvrp {

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double SlipTime(double distance, double w_max, double d_max) {
  if (!(distance >= 0.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "slip time distance must be >= 0, got " +
                    std::to_string(distance));
  }
  if (!(d_max > 0.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "d_max must be > 0, got " + std::to_string(d_max));
  }
  if (!(w_max >= 0.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "w_max must be >= 0, got " + std::to_string(w_max));
  }
  if (distance >= d_max) return 0.0;
  return w_max - w_max / d_max * distance;
}

double AvgNearestNeighborDistance(std::span<const Point> points) {
  if (points.size() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                "average nearest-neighbor distance needs >= 2 points");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const double d = Distance(points[i], points[j]);
      if (d < nearest) nearest = d;
    }
    total += nearest;
  }
  return total / static_cast<double>(points.size());
}

Point Centroid(std::span<const Point> points) {
  if (points.empty()) {
    throw Error(ErrorKind::kInvalidInput, "centroid of an empty point set");
  }
  Point sum;
  for (const Point& p : points) {
    sum.x += p.x;
    sum.y += p.y;
  }
  const auto n = static_cast<double>(points.size());
  return {sum.x / n, sum.y / n};
}

}  // namespace stcvrp
