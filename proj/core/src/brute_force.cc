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

#include "stcvrp/brute_force.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "stcvrp/error.h"
#include "stcvrp/simulator.h"

namespace stcvrp {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t MulSat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Advances `sizes` (k positive parts summing to n) to the next composition
// in lexicographic order. Returns false after the last one.
bool NextComposition(std::vector<std::size_t>& sizes) {
  const std::size_t k = sizes.size();
  if (k < 2) return false;
  // Rightmost position i < k-1 whose suffix (i+1..k-1) can spare one unit.
  for (std::size_t i = k - 1; i-- > 0;) {
    std::size_t suffix = 0;
    for (std::size_t j = i + 1; j < k; ++j) suffix += sizes[j];
    if (suffix > k - 1 - i) {
      ++sizes[i];
      --suffix;
      // Smallest suffix: all ones except the last part.
      for (std::size_t j = i + 1; j + 1 < k; ++j) sizes[j] = 1;
      sizes[k - 1] = suffix - (k - 2 - i);
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t EnumerationCount(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  std::uint64_t count = 1;
  for (int i = 2; i <= n; ++i) count = MulSat(count, static_cast<std::uint64_t>(i));
  // C(n-1, k-1) built incrementally; each partial product is an integer.
  std::uint64_t binom = 1;
  const int r = std::min(k - 1, n - k);
  for (int i = 1; i <= r; ++i) {
    const std::uint64_t numer = static_cast<std::uint64_t>(n - 1 - r + i);
    if (binom > kSaturated / numer) return kSaturated;
    binom = binom * numer / static_cast<std::uint64_t>(i);
  }
  return MulSat(count, binom);
}

BruteForceResult BruteForce(const Instance& instance, std::uint64_t limit) {
  const int n = instance.num_tasks();
  const int k = instance.num_vehicles();
  const std::uint64_t count = EnumerationCount(n, k);
  if (count > limit) {
    throw Error(ErrorKind::kRefusal,
                "enumeration size " +
                    (count == kSaturated ? std::string("> 2^64")
                                         : std::to_string(count)) +
                    " exceeds limit " + std::to_string(limit));
  }
  std::vector<NodeId> permutation(static_cast<std::size_t>(n));
  std::iota(permutation.begin(), permutation.end(), NodeId{1});

  BruteForceResult result;
  result.makespan = std::numeric_limits<double>::infinity();
  do {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 1);
    sizes.back() = static_cast<std::size_t>(n - k + 1);
    do {
      Solution candidate = Split(permutation, sizes);
      const double makespan = Makespan(instance, candidate);
      ++result.enumerated;
      if (makespan < result.makespan) {
        result.makespan = makespan;
        result.best = std::move(candidate);
      }
    } while (NextComposition(sizes));
  } while (std::next_permutation(permutation.begin(), permutation.end()));
  return result;
}

}  // namespace stcvrp
