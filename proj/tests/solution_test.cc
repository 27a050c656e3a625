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

#include "stcvrp/solution.h"

#include "gtest/gtest.h"
#include "stcvrp/error.h"
#include "support/fixtures.h"

namespace stcvrp {
namespace {

TEST(PartitionTest, AcceptsPartition) {
  EXPECT_FALSE(PartitionProblem({{{1, 2}, {3}}}, 3, 2).has_value());
}

TEST(PartitionTest, DetectsProblems) {
  EXPECT_TRUE(PartitionProblem({{{1, 2}, {2}}}, 3, 2));     // duplicate
  EXPECT_TRUE(PartitionProblem({{{1}, {3}}}, 3, 2));        // missing
  EXPECT_TRUE(PartitionProblem({{{1, 2, 3}}}, 3, 2));       // route count
  EXPECT_TRUE(PartitionProblem({{{1, 4}, {2, 3}}}, 3, 2));  // out of range
  EXPECT_TRUE(PartitionProblem({{{1, 2, 3}, {}}}, 3, 2));   // empty route
  EXPECT_FALSE(PartitionProblem({{{1, 2, 3}, {}}}, 3, 2, true));
}

TEST(PartitionTest, CheckThrowsInvalidSolution) {
  const Instance inst = testing::LineInstance();
  try {
    CheckPartition({{{1, 2, 3}, {}}}, inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidSolution);
  }
}

TEST(SolutionTest, FlattenSplitRoundTrip) {
  const Solution s{{{4, 1}, {3}, {2, 5, 6}}};
  EXPECT_EQ(Flatten(s), (std::vector<NodeId>{4, 1, 3, 2, 5, 6}));
  EXPECT_EQ(RouteSizes(s), (std::vector<std::size_t>{2, 1, 3}));
  EXPECT_EQ(Split(Flatten(s), RouteSizes(s)), s);
}

TEST(SolutionTest, RepairStealsFromLongestRoute) {
  Solution s{{{1, 2, 3}, {}, {4, 5}}};
  RepairEmptyRoutes(s);
  EXPECT_EQ(s, (Solution{{{1, 2}, {3}, {4, 5}}}));
  Solution t{{{}, {}, {1, 2, 3}}};
  RepairEmptyRoutes(t);
  EXPECT_FALSE(PartitionProblem(t, 3, 3));
}

TEST(SolutionTest, ToStringMentionsEveryTask) {
  const std::string text = ToString({{{1, 2}, {3}}});
  for (const char* id : {"1", "2", "3"}) {
    EXPECT_NE(text.find(id), std::string::npos) << text;
  }
}

}  // namespace
}  // namespace stcvrp
