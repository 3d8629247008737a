// Copyright 2026 The hypernim Authors.
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

#include "hypernim/position.h"

#include <gtest/gtest.h>

#include "hypernim/errors.h"

namespace hypernim {
namespace {

TEST(PositionTest, Accessors) {
  const Position x{4, 5, 2, 3};
  EXPECT_EQ(x.size(), 4);
  EXPECT_EQ(x.MinPile(), 2);
  EXPECT_EQ(x.MaxPile(), 5);
  EXPECT_EQ(x.MinOver(VertexSet{0, 1}), 4);
  EXPECT_EQ(x.Sum(), 14);
  EXPECT_EQ(x.ShiftedDown(2), (Position{2, 3, 0, 1}));
  EXPECT_TRUE(x.Dominates(Position{4, 1, 2, 0}));
  EXPECT_FALSE(x.Dominates(Position{5, 1, 2, 0}));
}

TEST(PositionTest, RejectsNegativePiles) {
  EXPECT_THROW(Position({1, -1}), InvalidArgument);
}

TEST(PositionTest, ParseAndFormat) {
  EXPECT_EQ(ParsePosition("1,2,4,2"), (Position{1, 2, 4, 2}));
  EXPECT_EQ(ParsePosition(" 7 , 0"), (Position{7, 0}));
  EXPECT_EQ(FormatPosition(Position{6, 7, 14}), "6,7,14");
  EXPECT_THROW(ParsePosition("1,,2"), ParseError);
  EXPECT_THROW(ParsePosition("1,-2"), ParseError);
  EXPECT_THROW(ParsePosition("a"), ParseError);
}

TEST(PositionTest, HashDistinguishesOrder) {
  PositionHash hash;
  EXPECT_EQ(hash(Position{1, 2}), hash(Position{1, 2}));
  EXPECT_NE(hash(Position{1, 2}), hash(Position{2, 1}));
}

}  // namespace
}  // namespace hypernim
