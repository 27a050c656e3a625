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

#include <string>

#include "gtest/gtest.h"
#include "stcvrp/error.h"
#include "support/fixtures.h"

namespace stcvrp {
namespace {

const char kValid[] = R"(STCVRP 1
# a comment
NAME tiny
VEHICLES 2
SPEED 5
SERVICE_TIME 8
WMAX 8
DMAX 150
DEPOT 0 0
NODES 3
1 40 0   # trailing comment
2 80 0
3 -40 0
EOF
)";

std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

void ExpectParseError(const std::string& text, const std::string& needle) {
  try {
    ParseInstance(text);
    FAIL() << "accepted:\n" << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
        << e.what();
  }
}

TEST(InstanceIoTest, ParsesValidText) {
  const Instance inst = ParseInstance(kValid);
  EXPECT_EQ(inst.name(), "tiny");
  EXPECT_EQ(inst.num_tasks(), 3);
  EXPECT_EQ(inst.num_vehicles(), 2);
  EXPECT_EQ(inst.node(3), (Point{-40, 0}));
  EXPECT_EQ(inst.d_max(), 150.0);
}

TEST(InstanceIoTest, RoundTripIsExact) {
  const Instance inst = testing::RandomInstance(40, 4, 3);
  const std::string text = FormatInstance(inst, "seed=3");
  const Instance back = ParseInstance(text);
  EXPECT_EQ(FormatInstance(back, "seed=3"), text);
  for (int i = 0; i <= inst.num_tasks(); ++i) {
    EXPECT_EQ(back.node(i), inst.node(i));
  }
  EXPECT_EQ(back.speed(), inst.speed());
}

TEST(InstanceIoTest, RejectsDuplicateIds) {
  ExpectParseError(Replace(kValid, "2 80 0", "1 80 0"), "line");
}

TEST(InstanceIoTest, RejectsMissingSection) {
  ExpectParseError(Replace(kValid, "WMAX 8\n", ""), "WMAX");
}

TEST(InstanceIoTest, RejectsCountMismatch) {
  ExpectParseError(Replace(kValid, "NODES 3", "NODES 4"), "");
  ExpectParseError(Replace(kValid, "NODES 3", "NODES 2"), "line");
}

TEST(InstanceIoTest, RejectsMissingHeaderAndEof) {
  ExpectParseError(Replace(kValid, "STCVRP 1\n", ""), "");
  ExpectParseError(Replace(kValid, "EOF\n", ""), "EOF");
}

TEST(InstanceIoTest, RejectsMalformedNumbers) {
  ExpectParseError(Replace(kValid, "SPEED 5", "SPEED fast"), "line 5");
  ExpectParseError(Replace(kValid, "2 80 0", "2 80"), "line 12");
}

TEST(InstanceIoTest, InvariantViolationIsNotAParseError) {
  try {
    ParseInstance(Replace(kValid, "VEHICLES 2", "VEHICLES 4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  }
}

TEST(InstanceIoTest, MissingFileIsIoError) {
  try {
    ReadInstanceFile("/nonexistent/dir/file.stcvrp");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

}  // namespace
}  // namespace stcvrp
