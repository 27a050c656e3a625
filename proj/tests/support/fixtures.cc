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

#include "support/fixtures.h"

#include <utility>

#include "stcvrp/rng.h"

namespace stcvrp::testing {

Instance MakeInstance(std::vector<Point> tasks, int k_max, double d_max,
                      double service_time, double w_max) {
  InstanceParams params;
  params.name = "fixture";
  params.tasks = std::move(tasks);
  params.k_max = k_max;
  params.speed = 5.0;
  params.service_time = service_time;
  params.w_max = w_max;
  params.d_max = d_max;
  return Instance(std::move(params));
}

Instance LineInstance() {
  return MakeInstance({{40, 0}, {80, 0}, {-40, 0}}, 2);
}

Instance ConflictInstance(double d_max) {
  return MakeInstance({{40, 0}, {-40, 0}}, 2, d_max);
}

Instance CascadeInstance() {
  return MakeInstance({{40, 0}, {-40, 0}, {0, 40}}, 3);
}

Instance RandomInstance(int n, int k, std::uint64_t seed, double side,
                        double d_max) {
  Rng rng(seed);
  std::vector<Point> tasks;
  for (int i = 0; i < n; ++i) {
    tasks.push_back({rng.Uniform(0.0, side), rng.Uniform(0.0, side)});
  }
  InstanceParams params;
  params.name = "random";
  params.depot = {side / 2, side / 2};
  params.tasks = std::move(tasks);
  params.k_max = k;
  params.d_max = d_max;
  return Instance(std::move(params));
}

Instance GeneratedInstance(Pattern pattern, int n, int k, double d_max,
                           std::uint64_t seed) {
  GeneratorSpec spec;
  spec.pattern = pattern;
  spec.n_tasks = n;
  spec.k_max = k;
  spec.d_max = d_max;
  spec.seed = seed;
  return Generate(spec);
}

}  // namespace stcvrp::testing
