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

#include "stcvrp/naming.h"

#include <regex>
#include <string>

#include "stcvrp/error.h"
#include "text_util.h"

namespace stcvrp {

char PatternLetter(Pattern pattern) {
  switch (pattern) {
    case Pattern::kClustered:
      return 'C';
    case Pattern::kRandom:
      return 'R';
    case Pattern::kGrid:
      return 'G';
  }
  return '?';
}

std::string_view PatternWord(Pattern pattern) {
  switch (pattern) {
    case Pattern::kClustered:
      return "clustered";
    case Pattern::kRandom:
      return "random";
    case Pattern::kGrid:
      return "grid";
  }
  return "unknown";
}

Pattern ParsePattern(std::string_view text) {
  if (text == "C" || text == "clustered") return Pattern::kClustered;
  if (text == "R" || text == "random") return Pattern::kRandom;
  if (text == "G" || text == "grid") return Pattern::kGrid;
  throw Error(ErrorKind::kParse, "unknown pattern '" + std::string(text) + "'");
}

std::string FormatName(const InstanceName& name) {
  return std::string(1, PatternLetter(name.pattern)) +
         std::to_string(name.num_tasks) + '_' +
         std::to_string(name.num_vehicles) + "k_" +
         internal::FormatDouble(name.d_max) + 'd';
}

InstanceName ParseName(std::string_view text) {
  static const std::regex kNamePattern(
      R"(^([CRG])([0-9]+)_([0-9]+)k_([0-9]+(?:\.[0-9]+)?)d$)");
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, kNamePattern)) {
    throw Error(ErrorKind::kParse,
                "'" + s + "' is not of the form <C|R|G><tasks>_<K>k_<dmax>d");
  }
  InstanceName name;
  name.pattern = ParsePattern(match[1].str());
  const auto tasks = internal::ParseInt(match[2].str());
  const auto vehicles = internal::ParseInt(match[3].str());
  const auto d_max = internal::ParseDouble(match[4].str());
  if (!tasks || !vehicles || !d_max || *tasks > 1'000'000'000 ||
      *vehicles > 1'000'000'000) {
    throw Error(ErrorKind::kParse, "numeric field out of range in '" + s + "'");
  }
  name.num_tasks = static_cast<int>(*tasks);
  name.num_vehicles = static_cast<int>(*vehicles);
  name.d_max = *d_max;
  return name;
}

}  // namespace stcvrp
