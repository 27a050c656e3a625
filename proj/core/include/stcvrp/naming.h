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

#ifndef STCVRP_NAMING_H_
#define STCVRP_NAMING_H_

#include <string>
#include <string_view>

namespace stcvrp {

// Task layout of a benchmark instance; letters C, R, G in names.
enum class Pattern { kClustered, kRandom, kGrid };

char PatternLetter(Pattern pattern);
std::string_view PatternWord(Pattern pattern);  // "clustered", ...
// Accepts a letter (C/R/G) or a word (clustered/random/grid).
Pattern ParsePattern(std::string_view text);

struct InstanceName {
  Pattern pattern = Pattern::kGrid;
  int num_tasks = 0;
  int num_vehicles = 0;
  double d_max = 0.0;

  friend bool operator==(const InstanceName&, const InstanceName&) = default;
};

// "<letter><tasks>_<vehicles>k_<dmax>d", e.g. "G50_5k_200d".
std::string FormatName(const InstanceName& name);
// Throws Error(kParse) when `text` does not follow the convention.
InstanceName ParseName(std::string_view text);

}  // namespace stcvrp

#endif  // STCVRP_NAMING_H_
