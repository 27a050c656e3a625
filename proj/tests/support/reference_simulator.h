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

#ifndef STCVRP_TESTS_SUPPORT_REFERENCE_SIMULATOR_H_
#define STCVRP_TESTS_SUPPORT_REFERENCE_SIMULATOR_H_

#include <vector>

#include "stcvrp/instance.h"
#include "stcvrp/solution.h"

namespace stcvrp::testing {

// Straightforward re-implementation of the event semantics used as a test
// oracle: no event queue, every step scans all vehicles for the next event.
struct ReferenceResult {
  std::vector<double> arrival;  // by task id
  std::vector<double> start;
  std::vector<double> completion;  // by vehicle, event clock
  double makespan = 0.0;
  int arrive_events = 0;
  int start_events = 0;
  int end_events = 0;
};

ReferenceResult ReferenceEvaluate(const Instance& instance,
                                  const Solution& solution);

}  // namespace stcvrp::testing

#endif  // STCVRP_TESTS_SUPPORT_REFERENCE_SIMULATOR_H_
