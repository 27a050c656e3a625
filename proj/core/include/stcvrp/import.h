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

#ifndef STCVRP_IMPORT_H_
#define STCVRP_IMPORT_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "stcvrp/geometry.h"

namespace stcvrp {

enum class CoordinateFormat { kTsplib, kSolomon };

struct ImportedCoordinates {
  CoordinateFormat format = CoordinateFormat::kTsplib;
  std::vector<long long> ids;  // as written in the file
  std::vector<Point> points;   // every row, file order
  std::size_t depot_index = 0; // TSPLIB node 1, Solomon customer 0

  Point depot() const { return points.at(depot_index); }
  // Task coordinates: every TSPLIB node; Solomon rows without the depot.
  std::vector<Point> Tasks() const;
};

// Reads a TSPLIB file (rows after NODE_COORD_SECTION, up to EOF or the next
// section), a bare "<id> <x> <y>" body, or a Solomon customer table (seven
// numeric columns per row). Throws Error(kParse) with the line number on a
// malformed row or a duplicate id.
ImportedCoordinates ImportCoordinates(std::string_view text);

}  // namespace stcvrp

#endif  // STCVRP_IMPORT_H_
