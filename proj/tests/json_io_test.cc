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

#include "stcvrp/json_io.h"

#include "gtest/gtest.h"
#include "stcvrp/error.h"
#include "stcvrp/simulator.h"
#include "stcvrp/validate.h"
#include "support/fixtures.h"

namespace stcvrp {
namespace {

using nlohmann::json;

TEST(JsonIoTest, SolutionRoundTrip) {
  const Solution sol{{{3, 1}, {2}}};
  EXPECT_EQ(SolutionFromJson(SolutionToJson(sol)), sol);
  EXPECT_EQ(SolutionFromJson(json::parse("[[3,1],[2]]")), sol);
}

TEST(JsonIoTest, SolutionRejectsGarbage) {
  EXPECT_THROW(SolutionFromJson(json::parse(R"({"routes": 3})")), Error);
  EXPECT_THROW(SolutionFromJson(json::parse(R"([["a"]])")), Error);
}

TEST(JsonIoTest, ScheduleRoundTripValidates) {
  const Instance inst = testing::CascadeInstance();
  const Solution sol{{{1}, {2}, {3}}};
  const Schedule s = Evaluate(inst, sol);
  const json j = ScheduleToJson(s);
  EXPECT_DOUBLE_EQ(j.at("makespan").get<double>(), s.makespan);
  ASSERT_EQ(j.at("tasks").size(), 3u);
  EXPECT_EQ(j.at("tasks")[2].at("vehicle").get<int>(), 3);
  const Schedule back = ScheduleFromJson(json::parse(j.dump()), inst);
  EXPECT_EQ(back.start, s.start);
  EXPECT_EQ(back.vehicle_completion, s.vehicle_completion);
  EXPECT_TRUE(ValidateSchedule(inst, sol, back).feasible());
}

TEST(JsonIoTest, ScheduleMustCoverEveryTask) {
  const Instance inst = testing::CascadeInstance();
  json j = ScheduleToJson(Evaluate(inst, {{{1}, {2}, {3}}}));
  j["tasks"].erase(1);
  EXPECT_THROW(ScheduleFromJson(j, inst), Error);
}

TEST(JsonIoTest, ReportLists) {
  ViolationReport r;
  r.warnings.push_back("w");
  const json j = ReportToJson(r);
  EXPECT_TRUE(j.at("feasible").get<bool>());
  EXPECT_EQ(j.at("warnings").size(), 1u);
}

}  // namespace
}  // namespace stcvrp
