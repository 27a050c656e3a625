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

#ifndef STCVRP_ERROR_H_
#define STCVRP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stcvrp {

enum class ErrorKind {
  kInvalidParameter,
  kIndex,
  kInvalidInput,
  kInvalidSolution,
  kParse,
  kDegenerateInput,
  kRefusal,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stcvrp

#endif  // STCVRP_ERROR_H_
