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

#include "stcvrp/generator.h"

#include <cmath>

#include "stcvrp/error.h"
#include "text_util.h"

namespace stcvrp {
namespace {

// Side of the square whose uniform point field has expected nearest-neighbor
// distance `target` (0.5 / sqrt(density) for a Poisson field).
double RandomSquareSide(int n, double target) {
  return std::sqrt(static_cast<double>(n)) * target / 0.5;
}

}  // namespace

void ValidateSpec(const GeneratorSpec& spec) {
  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorKind::kInvalidParameter, message);
  };
  require(spec.k_max >= 1, "k_max must be >= 1");
  require(spec.n_tasks >= spec.k_max,
          "n_tasks (" + std::to_string(spec.n_tasks) + ") must be >= k_max (" +
              std::to_string(spec.k_max) + ")");
  require(spec.n_tasks >= 2, "n_tasks must be >= 2");
  require(spec.d_max > 0.0, "d_max must be > 0");
  require(spec.target_avg_nn > 0.0, "target_avg_nn must be > 0");
  require(spec.speed > 0.0, "speed must be > 0");
  require(spec.service_time > 0.0, "service_time must be > 0");
  require(spec.w_max > 0.0, "w_max must be > 0");
  require(spec.noise_sigma >= 0.0, "noise_sigma must be >= 0");
}

std::vector<Point> RescaleCoordinates(std::span<const Point> points,
                                      double target) {
  const double current = AvgNearestNeighborDistance(points);
  if (!(current > 0.0)) {
    throw Error(ErrorKind::kDegenerateInput,
                "cannot rescale: all points coincide");
  }
  const double factor = target / current;
  std::vector<Point> scaled;
  scaled.reserve(points.size());
  for (const Point& p : points) scaled.push_back({p.x * factor, p.y * factor});
  return scaled;
}

Instance BuildInstance(std::span<const Point> raw_tasks,
                       const GeneratorSpec& spec) {
  InstanceParams params;
  params.tasks = RescaleCoordinates(raw_tasks, spec.target_avg_nn);
  params.depot = Centroid(params.tasks);
  params.name = FormatName({spec.pattern, static_cast<int>(raw_tasks.size()),
                            spec.k_max, spec.d_max});
  params.k_max = spec.k_max;
  params.speed = spec.speed;
  params.service_time = spec.service_time;
  params.w_max = spec.w_max;
  params.d_max = spec.d_max;
  return Instance(std::move(params));
}

Instance GenerateGrid(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  const int rows = static_cast<int>(
      std::ceil(std::sqrt(static_cast<double>(spec.n_tasks))));
  const int cols = (spec.n_tasks + rows - 1) / rows;
  Rng rng(spec.seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(spec.n_tasks));
  for (int i = 0; i < spec.n_tasks; ++i) {
    Point p{(i % cols) * spec.target_avg_nn, (i / cols) * spec.target_avg_nn};
    if (spec.noise_sigma > 0.0) {
      p.x += rng.Normal(0.0, spec.noise_sigma);
      p.y += rng.Normal(0.0, spec.noise_sigma);
    }
    points.push_back(p);
  }
  return BuildInstance(points, spec);
}

ClusterSample SampleClusters(const GeneratorSpec& spec, Rng& rng) {
  const double side = RandomSquareSide(spec.n_tasks, spec.target_avg_nn);
  const double spread = 1.5 * spec.target_avg_nn;
  ClusterSample sample;
  for (int c = 0; c < spec.k_max; ++c) {
    sample.centers.push_back({rng.Uniform(0.0, side), rng.Uniform(0.0, side)});
  }
  for (int i = 0; i < spec.n_tasks; ++i) {
    const int blob = i % spec.k_max;
    const Point& center = sample.centers[static_cast<std::size_t>(blob)];
    sample.points.push_back({rng.Normal(center.x, spread),
                             rng.Normal(center.y, spread)});
    sample.labels.push_back(blob);
  }
  return sample;
}

Instance GenerateScattered(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  Rng rng(spec.seed);
  switch (spec.pattern) {
    case Pattern::kRandom: {
      const double side = RandomSquareSide(spec.n_tasks, spec.target_avg_nn);
      std::vector<Point> points;
      points.reserve(static_cast<std::size_t>(spec.n_tasks));
      for (int i = 0; i < spec.n_tasks; ++i) {
        points.push_back({rng.Uniform(0.0, side), rng.Uniform(0.0, side)});
      }
      return BuildInstance(points, spec);
    }
    case Pattern::kClustered:
      return BuildInstance(SampleClusters(spec, rng).points, spec);
    case Pattern::kGrid:
      break;
  }
  throw Error(ErrorKind::kInvalidParameter,
              "scattered generation needs the random or clustered pattern");
}

Instance Generate(const GeneratorSpec& spec) {
  return spec.pattern == Pattern::kGrid ? GenerateGrid(spec)
                                        : GenerateScattered(spec);
}

std::string GeneratorComment(const GeneratorSpec& spec) {
  std::string comment = "generated pattern=" +
                        std::string(PatternWord(spec.pattern)) +
                        " seed=" + std::to_string(spec.seed) +
                        " target_avg_nn=" +
                        internal::FormatDouble(spec.target_avg_nn);
  if (spec.pattern == Pattern::kGrid) {
    comment += " noise_sigma=" + internal::FormatDouble(spec.noise_sigma);
  }
  return comment;
}

}  // namespace stcvrp
