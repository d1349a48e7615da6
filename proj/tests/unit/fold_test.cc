// Copyright 2026 The htable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <functional>

#include <gtest/gtest.h>

#include "fixture.h"
#include "htable/error.h"
#include "htable/grid_doc.h"
#include "htable/transform.h"
#include "oracles.h"

namespace htable {
namespace {

using testing::CoordinateMultiset;
using testing::StackedSeasonalFixture;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidModel;
}

TEST(FoldTest, SeasonsBecomeAKeyColumn) {
  TableModel m = StackedSeasonalFixture();
  TableModel f = Fold(m, 2);
  ASSERT_EQ(f.entries.rows(), 16u);
  ASSERT_EQ(f.entries.cols(), 3u);
  EXPECT_EQ(f.col_axis.roots[0].label.name, "season");
  EXPECT_EQ(f.col_axis.roots[1].label.name, "2020");
  EXPECT_EQ(f.col_axis.roots[2].label.name, "2021");
  EXPECT_EQ(f.row_axis.level_names.back(), "season");
  EXPECT_TRUE(IsKeyColumn(f, 0));
  EXPECT_FALSE(IsKeyColumn(f, 1));
  // (Asia, CHN, SHA, spr) is the third row.
  EXPECT_EQ(f.entries(2, 0), Value::Text("spr"));
  EXPECT_EQ(f.entries(2, 1), Value::Number(131));

  // Oracle: enumerate (row leaf, season) pairs.
  const std::vector<std::string> seasons = {"spr", "aut"};
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t row = 2 * r + s;
      EXPECT_EQ(f.entries(row, 0), Value::Text(seasons[s]));
      for (std::size_t y = 0; y < 2; ++y) {
        EXPECT_EQ(f.entries(row, 1 + y), m.entries(r, 2 * y + s));
      }
    }
  }
  EXPECT_EQ(CoordinateMultiset(f), CoordinateMultiset(m));
}

TEST(FoldTest, UnfoldRestoresTheTable) {
  TableModel m = StackedSeasonalFixture();
  for (int level : {1, 2}) {
    TableModel f = Fold(m, level);
    TableModel u = Unfold(f, 0, 1, level);
    EXPECT_TRUE(Equivalent(u, m)) << "level " << level;
    EXPECT_EQ(u.version, 3);
  }
}

TEST(FoldTest, FoldingTwiceLeavesAValueColumn) {
  TableModel m = StackedSeasonalFixture();
  TableModel once = Fold(m, 2);
  TableModel twice = Fold(once, 1);
  EXPECT_EQ(twice.entries.rows(), 32u);
  ASSERT_EQ(twice.entries.cols(), 3u);
  EXPECT_EQ(twice.col_axis.roots[0].label.name, "year");
  EXPECT_EQ(twice.col_axis.roots[1].label.name, "season");
  EXPECT_EQ(twice.col_axis.roots[2].label.name, "value");
  EXPECT_EQ(CoordinateMultiset(twice), CoordinateMultiset(m));
  TableModel back = Unfold(Unfold(twice, 0, 2, 1), 0, 1, 2);
  EXPECT_TRUE(Equivalent(back, m));
}

TEST(FoldTest, Errors) {
  EXPECT_EQ(CodeOf([] { Fold(testing::SeasonalFixture(), 2); }),
            ErrorCode::kDerivedPresent);
  EXPECT_EQ(CodeOf([] { Fold(StackedSeasonalFixture(), 3); }),
            ErrorCode::kInvalidOp);
  HeadingAxis rows{{Node("a")}, 1, {"r"}};
  HeadingAxis cols{{Node("g", {Node("x"), Node("y")}), Node("h", {Node("x")})},
                   2,
                   {"c1", "c2"}};
  TableModel ragged = MakeModel(rows, cols, ValueGrid(1, 3));
  EXPECT_EQ(CodeOf([&] { Fold(ragged, 2); }), ErrorCode::kNotUniform);
  EXPECT_EQ(CodeOf([&] { Fold(ragged, 1); }), ErrorCode::kNotUniform);
}

TEST(UnfoldTest, TidyTableGroupsByTheOtherKeys) {
  TableModel tidy = ParseGrid(GridDocFromCsv(
      "city,season,visitors\nPEK,spr,120\nPEK,aut,98\nSHA,spr,131\n"
      "SHA,aut,119\n",
      {}, 1, 0));
  EXPECT_TRUE(IsKeyColumn(tidy, 0));
  EXPECT_TRUE(IsKeyColumn(tidy, 1));
  TableModel wide = Unfold(tidy, 1, 2);
  ASSERT_EQ(wide.entries.rows(), 2u);
  ASSERT_EQ(wide.entries.cols(), 3u);
  EXPECT_EQ(wide.row_axis.level_names, std::vector<std::string>{"group"});
  EXPECT_EQ(wide.row_axis.roots[1].label.name, "SHA");
  EXPECT_EQ(wide.col_axis.level_names,
            (std::vector<std::string>{"col-level-1", "season"}));
  EXPECT_EQ(wide.entries(1, 0), Value::Text("SHA"));
  EXPECT_EQ(wide.entries(1, 1), Value::Number(131));
  EXPECT_EQ(wide.entries(0, 2), Value::Number(98));
  const auto& visitors = wide.col_axis.roots[1];
  EXPECT_EQ(visitors.label.name, "visitors");
  EXPECT_EQ(visitors.children[1].label.name, "aut");
}

TEST(UnfoldTest, SingleKeyCollapsesToOneGroup) {
  TableModel tidy = ParseGrid(
      GridDocFromCsv("season,visitors\nspr,1\naut,2\n", {}, 1, 0));
  TableModel wide = Unfold(tidy, 0, 1);
  ASSERT_EQ(wide.entries.rows(), 1u);
  EXPECT_EQ(wide.row_axis.roots[0].label.name, "all");
  EXPECT_EQ(wide.entries(0, 1), Value::Number(2));
}

TEST(UnfoldTest, Errors) {
  TableModel tidy = ParseGrid(GridDocFromCsv(
      "city,season,visitors,note\nPEK,spr,1,x\nPEK,spr,2,y\n", {}, 1, 0));
  EXPECT_EQ(CodeOf([&] { Unfold(tidy, 2, 1); }), ErrorCode::kNotCategorical);
  EXPECT_EQ(CodeOf([&] { Unfold(tidy, 0, 3); }), ErrorCode::kNotNumeric);
  TableModel dup = ParseGrid(GridDocFromCsv(
      "city,season,visitors\nPEK,spr,1\nPEK,spr,2\n", {}, 1, 0));
  EXPECT_EQ(CodeOf([&] { Unfold(dup, 1, 2); }), ErrorCode::kIrregularGroups);
  EXPECT_EQ(CodeOf([&] { Unfold(tidy, 1, 1); }), ErrorCode::kInvalidOp);
  EXPECT_EQ(CodeOf([&] { Unfold(tidy, 1, 9); }), ErrorCode::kInvalidOp);

  TableModel missing = ParseGrid(GridDocFromCsv(
      "city,season,visitors\nPEK,spr,1\nPEK,aut,2\nSHA,spr,3\n", {}, 1, 0));
  EXPECT_EQ(CodeOf([&] { Unfold(missing, 1, 2); }),
            ErrorCode::kIrregularGroups);
}

}  // namespace
}  // namespace htable
