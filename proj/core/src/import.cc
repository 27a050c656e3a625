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

#include "stcvrp/import.h"

#include <cctype>
#include <set>
#include <string>

#include "stcvrp/error.h"
#include "text_util.h"

namespace stcvrp {
namespace {

using internal::ParseDouble;
using internal::ParseInt;
using internal::SplitWhitespace;

[[noreturn]] void Fail(std::size_t line_no, const std::string& message) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + message);
}

bool StartsNumeric(std::string_view token) {
  if (token.empty()) return false;
  const char c = token.front();
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
         c == '.';
}

bool Contains(std::string_view text, std::string_view needle) {
  return text.find(needle) != std::string_view::npos;
}

}  // namespace

std::vector<Point> ImportedCoordinates::Tasks() const {
  if (format == CoordinateFormat::kTsplib) return points;
  std::vector<Point> tasks;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != depot_index) tasks.push_back(points[i]);
  }
  return tasks;
}

ImportedCoordinates ImportCoordinates(std::string_view text) {
  const auto lines = internal::SplitLines(text);
  ImportedCoordinates result;
  const bool has_coord_section = Contains(text, "NODE_COORD_SECTION");
  const bool solomon_header = Contains(text, "CUST");

  // Locate the first data line and the layout.
  std::size_t first = 0;
  if (has_coord_section) {
    while (first < lines.size() &&
           !Contains(lines[first], "NODE_COORD_SECTION")) {
      ++first;
    }
    ++first;
    result.format = CoordinateFormat::kTsplib;
  } else if (solomon_header) {
    while (first < lines.size() && !Contains(lines[first], "CUST")) ++first;
    ++first;
    result.format = CoordinateFormat::kSolomon;
  } else {
    while (first < lines.size() && SplitWhitespace(lines[first]).empty()) {
      ++first;
    }
    if (first < lines.size() && SplitWhitespace(lines[first]).size() >= 7) {
      result.format = CoordinateFormat::kSolomon;
    }
  }
  const std::size_t columns =
      result.format == CoordinateFormat::kTsplib ? 3 : 7;

  std::set<long long> seen;
  for (std::size_t idx = first; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const auto tokens = SplitWhitespace(lines[idx]);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0] == "EOF") break;
    if (!StartsNumeric(tokens[0])) {
      // Next TSPLIB section (DEMAND_SECTION, ...) ends the coordinates.
      if (has_coord_section) break;
      // Solomon tables repeat column headers ("CUST NO.  XCOORD. ...").
      if (solomon_header) continue;
      Fail(line_no, "expected a coordinate row, got '" +
                        std::string(lines[idx]) + "'");
    }
    if (tokens.size() != columns) {
      Fail(line_no, "expected " + std::to_string(columns) +
                        " columns, got " + std::to_string(tokens.size()));
    }
    const auto id = ParseInt(tokens[0]);
    const auto x = ParseDouble(tokens[1]);
    const auto y = ParseDouble(tokens[2]);
    if (!id) Fail(line_no, "bad id '" + std::string(tokens[0]) + "'");
    if (!x || !y) Fail(line_no, "bad coordinate");
    for (std::size_t c = 3; c < tokens.size(); ++c) {
      if (!ParseDouble(tokens[c])) Fail(line_no, "bad numeric column");
    }
    if (!seen.insert(*id).second) {
      Fail(line_no, "duplicate id " + std::to_string(*id));
    }
    result.ids.push_back(*id);
    result.points.push_back({*x, *y});
  }
  if (result.points.empty()) {
    throw Error(ErrorKind::kParse, "no coordinate rows found");
  }

  const long long depot_id =
      result.format == CoordinateFormat::kTsplib ? 1 : 0;
  for (std::size_t i = 0; i < result.ids.size(); ++i) {
    if (result.ids[i] == depot_id) {
      result.depot_index = i;
      break;
    }
  }
  return result;
}

}  // namespace stcvrp
