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

#ifndef STCVRP_GENERATOR_H_
#define STCVRP_GENERATOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stcvrp/geometry.h"
#include "stcvrp/instance.h"
#include "stcvrp/naming.h"
#include "stcvrp/rng.h"

namespace stcvrp {

struct GeneratorSpec {
  Pattern pattern = Pattern::kGrid;
  int n_tasks = 25;
  int k_max = 2;
  double d_max = 150.0;          // m
  double target_avg_nn = 40.0;   // m
  double speed = 5.0;            // m/s
  double service_time = 8.0;     // s
  double w_max = 8.0;            // s
  double noise_sigma = 4.0;      // m, grid only
  std::uint64_t seed = 1;
};

// Throws Error(kInvalidParameter) on n_tasks < k_max or non-positive
// scalars (noise_sigma may be 0).
void ValidateSpec(const GeneratorSpec& spec);

// Multiplies every coordinate (about the origin) so that the average
// nearest-neighbor distance becomes `target`. Throws Error(kDegenerateInput)
// if all points coincide.
std::vector<Point> RescaleCoordinates(std::span<const Point> points,
                                      double target);

// Rescales `raw_tasks` to the spec's target, puts the depot at their
// centroid and names the instance by convention.
Instance BuildInstance(std::span<const Point> raw_tasks,
                       const GeneratorSpec& spec);

// Near-square grid: r = ceil(sqrt(n)) rows, c = ceil(n / r) columns,
// spacing = target_avg_nn, first n cells row-major, each coordinate
// perturbed by N(0, noise_sigma^2), then rescaled.
Instance GenerateGrid(const GeneratorSpec& spec);

struct ClusterSample {
  std::vector<Point> points;
  std::vector<Point> centers;
  std::vector<int> labels;  // blob index per point
};

// k_max Gaussian blobs (std 1.5 * target) with uniform centers; point i
// belongs to blob i mod k_max. Coordinates are not yet rescaled.
ClusterSample SampleClusters(const GeneratorSpec& spec, Rng& rng);

// Random: uniform in a square of side 2 * sqrt(n) * target. Clustered:
// SampleClusters. Both rescaled afterwards.
Instance GenerateScattered(const GeneratorSpec& spec);

// Dispatches on spec.pattern.
Instance Generate(const GeneratorSpec& spec);

// Comment line recorded in generated instance files.
std::string GeneratorComment(const GeneratorSpec& spec);

}  // namespace stcvrp

#endif  // STCVRP_GENERATOR_H_
