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

#ifndef STCVRP_BRUTE_FORCE_H_
#define STCVRP_BRUTE_FORCE_H_

#include <cstdint>

#include "stcvrp/instance.h"
#include "stcvrp/solution.h"

namespace stcvrp {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 5'000'000;

// Number of ordered partitions of n tasks into k non-empty routes,
// n! * C(n-1, k-1). Saturates at UINT64_MAX.
std::uint64_t EnumerationCount(int n, int k);

struct BruteForceResult {
  Solution best;
  double makespan = 0.0;
  std::uint64_t enumerated = 0;
};

// Exhaustive minimum of Makespan over all ordered partitions. Permutations
// are visited in lexicographic order and, for each, route-size compositions
// in lexicographic order; the first strict minimum is kept.
// Throws Error(kRefusal) when EnumerationCount exceeds `limit`.
BruteForceResult BruteForce(const Instance& instance,
                            std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace stcvrp

#endif  // STCVRP_BRUTE_FORCE_H_
