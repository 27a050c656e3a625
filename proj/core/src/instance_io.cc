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

#include "stcvrp/instance_io.h"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stcvrp/error.h"
#include "text_util.h"

namespace stcvrp {
namespace {

using internal::FormatDouble;
using internal::ParseDouble;
using internal::ParseInt;
using internal::SplitWhitespace;

[[noreturn]] void Fail(std::size_t line_no, const std::string& message) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + message);
}

double NumberAt(std::string_view token, std::size_t line_no) {
  const auto v = ParseDouble(token);
  if (!v) Fail(line_no, "expected a number, got '" + std::string(token) + "'");
  return *v;
}

}  // namespace

std::string FormatInstance(const Instance& instance,
                           std::string_view header_comment) {
  std::ostringstream out;
  out << "STCVRP 1\n";
  for (std::string_view line : internal::SplitLines(header_comment)) {
    out << "# " << line << '\n';
  }
  out << "NAME " << instance.name() << '\n'
      << "VEHICLES " << instance.num_vehicles() << '\n'
      << "SPEED " << FormatDouble(instance.speed()) << '\n'
      << "SERVICE_TIME " << FormatDouble(instance.service_time()) << '\n'
      << "WMAX " << FormatDouble(instance.w_max()) << '\n'
      << "DMAX " << FormatDouble(instance.d_max()) << '\n'
      << "DEPOT " << FormatDouble(instance.depot().x) << ' '
      << FormatDouble(instance.depot().y) << '\n'
      << "NODES " << instance.num_tasks() << '\n';
  int id = 1;
  for (const Point& p : instance.tasks()) {
    out << id++ << ' ' << FormatDouble(p.x) << ' ' << FormatDouble(p.y)
        << '\n';
  }
  out << "EOF\n";
  return out.str();
}

Instance ParseInstance(std::string_view text) {
  const auto lines = internal::SplitLines(text);
  InstanceParams params;
  std::set<std::string> seen;
  std::optional<long long> node_count;
  std::vector<bool> have_id;
  bool header = false;
  bool eof = false;
  long long rows = 0;
  long long next_id = 1;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    std::string_view line = lines[idx];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    if (eof) Fail(line_no, "content after EOF");

    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "STCVRP" || tokens[1] != "1") {
        Fail(line_no, "expected 'STCVRP 1' header");
      }
      header = true;
      continue;
    }

    if (node_count && rows < *node_count) {
      if (tokens.size() != 3) Fail(line_no, "node row needs '<id> <x> <y>'");
      const auto id = ParseInt(tokens[0]);
      if (!id) Fail(line_no, "bad node id '" + std::string(tokens[0]) + "'");
      if (*id < 1 || *id > *node_count) {
        Fail(line_no, "node id " + std::to_string(*id) + " outside 1.." +
                          std::to_string(*node_count));
      }
      if (have_id[static_cast<std::size_t>(*id)]) {
        Fail(line_no, "duplicate node id " + std::to_string(*id));
      }
      if (*id != next_id) {
        Fail(line_no, "node ids must be in order; expected " +
                          std::to_string(next_id));
      }
      have_id[static_cast<std::size_t>(*id)] = true;
      params.tasks.push_back(
          {NumberAt(tokens[1], line_no), NumberAt(tokens[2], line_no)});
      ++rows;
      ++next_id;
      continue;
    }

    const std::string key(tokens[0]);
    if (key == "EOF") {
      if (tokens.size() != 1) Fail(line_no, "EOF takes no arguments");
      eof = true;
      continue;
    }
    if (node_count && ParseInt(tokens[0])) {
      Fail(line_no, "more node rows than NODES declares (" +
                        std::to_string(*node_count) + ")");
    }
    if (!seen.insert(key).second) Fail(line_no, "duplicate section " + key);

    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1) {
        Fail(line_no, key + " expects " + std::to_string(n) + " value(s)");
      }
    };
    if (key == "NAME") {
      expect_args(1);
      params.name = std::string(tokens[1]);
    } else if (key == "VEHICLES") {
      expect_args(1);
      const auto k = ParseInt(tokens[1]);
      if (!k) Fail(line_no, "VEHICLES must be an integer");
      params.k_max = static_cast<int>(*k);
    } else if (key == "SPEED") {
      expect_args(1);
      params.speed = NumberAt(tokens[1], line_no);
    } else if (key == "SERVICE_TIME") {
      expect_args(1);
      params.service_time = NumberAt(tokens[1], line_no);
    } else if (key == "WMAX") {
      expect_args(1);
      params.w_max = NumberAt(tokens[1], line_no);
    } else if (key == "DMAX") {
      expect_args(1);
      params.d_max = NumberAt(tokens[1], line_no);
    } else if (key == "DEPOT") {
      expect_args(2);
      params.depot = {NumberAt(tokens[1], line_no),
                      NumberAt(tokens[2], line_no)};
    } else if (key == "NODES") {
      expect_args(1);
      const auto n = ParseInt(tokens[1]);
      if (!n || *n < 0) Fail(line_no, "NODES must be a non-negative integer");
      node_count = *n;
      have_id.assign(static_cast<std::size_t>(*n) + 1, false);
    } else {
      Fail(line_no, "unknown section '" + key + "'");
    }
  }

  const std::size_t end_line = lines.size();
  if (!header) Fail(end_line, "missing 'STCVRP 1' header");
  for (const char* required : {"NAME", "VEHICLES", "SPEED", "SERVICE_TIME",
                               "WMAX", "DMAX", "DEPOT", "NODES"}) {
    if (!seen.contains(required)) {
      Fail(end_line, std::string("missing section ") + required);
    }
  }
  if (rows != *node_count) {
    Fail(end_line, "NODES declares " + std::to_string(*node_count) +
                       " rows but " + std::to_string(rows) + " were given");
  }
  if (!eof) Fail(end_line, "missing EOF");
  return Instance(std::move(params));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  return ParseInstance(ReadTextFile(path));
}

}  // namespace stcvrp
