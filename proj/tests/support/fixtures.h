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

#ifndef STCVRP_TESTS_SUPPORT_FIXTURES_H_
#define STCVRP_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "stcvrp/generator.h"
#include "stcvrp/instance.h"
#include "stcvrp/solution.h"

namespace stcvrp::testing {

// depot (0,0), speed 5, w 8, w_max 8, d_max 150 unless stated.
Instance MakeInstance(std::vector<Point> tasks, int k_max,
                      double d_max = 150.0, double service_time = 8.0,
                      double w_max = 8.0);

// Tasks (40,0), (80,0), (-40,0); K = 2.
Instance LineInstance();
// Tasks (40,0), (-40,0); K = 2.
Instance ConflictInstance(double d_max = 150.0);
// Tasks (40,0), (-40,0), (0,40); K = 3.
Instance CascadeInstance();

// Tasks uniform in [0, side)^2, depot at the center.
Instance RandomInstance(int n, int k, std::uint64_t seed, double side = 300.0,
                        double d_max = 150.0);

Instance GeneratedInstance(Pattern pattern, int n, int k, double d_max,
                           std::uint64_t seed);

}  // namespace stcvrp::testing

#endif  // STCVRP_TESTS_SUPPORT_FIXTURES_H_
