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

#ifndef STCVRP_INSTANCE_IO_H_
#define STCVRP_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "stcvrp/instance.h"

namespace stcvrp {

// Line-oriented instance format:
//
//   STCVRP 1
//   NAME <string>
//   VEHICLES <int>
//   SPEED <m/s>
//   SERVICE_TIME <s>
//   WMAX <s>
//   DMAX <m>
//   DEPOT <x> <y>
//   NODES <N>
//   <id> <x> <y>        (N rows, ids 1..N in order)
//   EOF
//
// '#' starts a comment. Each line of `header_comment` is written as a
// leading comment.
std::string FormatInstance(const Instance& instance,
                           std::string_view header_comment = {});

// Throws Error(kParse) naming the offending line, or Error(kInvalidParameter)
// when the parsed values violate an Instance invariant.
Instance ParseInstance(std::string_view text);

Instance ReadInstanceFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace stcvrp

#endif  // STCVRP_INSTANCE_IO_H_
