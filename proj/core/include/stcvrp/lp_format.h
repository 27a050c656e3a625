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

#ifndef STCVRP_LP_FORMAT_H_
#define STCVRP_LP_FORMAT_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stcvrp {

// Parsed form of a CPLEX LP file (the subset: objective, linear
// constraints, bounds, binaries and generals).
struct LpProblem {
  struct Row {
    std::string name;
    std::vector<std::pair<double, std::string>> terms;
    std::string sense;  // "<=", ">=" or "="
    double rhs = 0.0;
  };

  bool minimize = true;
  std::string objective_name;
  std::vector<std::pair<double, std::string>> objective;
  std::vector<Row> rows;
  std::vector<std::string> bounded;  // variables named in Bounds
  std::vector<std::string> binaries;
  std::vector<std::string> generals;
  std::set<std::string> variables;  // every name referenced anywhere
};

// Throws Error(kParse) on text outside the grammar.
LpProblem ParseLp(std::string_view text);

}  // namespace stcvrp

#endif  // STCVRP_LP_FORMAT_H_
