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

#include "htable/htj.h"

#include <functional>

#include <gtest/gtest.h>

#include "fixture.h"
#include "htable/error.h"
#include "htable/grid_doc.h"
#include "htable/transform.h"

namespace htable {
namespace {

using nlohmann::json;
using testing::DataPath;
using testing::ReadFile;

Error ErrorOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::kInvalidModel, "none");
}

TEST(HtjTest, RoundTripsTheFixture) {
  TableModel m = testing::SeasonalFixture();
  std::string text = DumpHtj(m);
  TableModel back = ParseHtjText(text);
  EXPECT_TRUE(Equivalent(m, back));
  EXPECT_EQ(DumpHtj(back), text);
}

TEST(HtjTest, HtjAndGridParsersAgree) {
  TableModel grid = ModelFromJson(
      json::parse(ReadFile(DataPath("seasonal.grid.json"))));
  TableModel htj = ParseHtjText(ReadFile(DataPath("seasonal.htj.json")));
  EXPECT_TRUE(Equivalent(grid, htj));
}

TEST(HtjTest, DocumentLayout) {
  json j = SerializeHtj(testing::SeasonalFixture());
  EXPECT_EQ(j["htj_version"], 1);
  EXPECT_EQ(j["level_names"]["column"], json({"year", "season"}));
  EXPECT_EQ(j["column_headings"][0]["children"][0],
            json({{"label", "&"}, {"derived", "sum"}}));
  EXPECT_EQ(j["entries"][1][1], 131);
  EXPECT_TRUE(j["entries"][1][1].is_number_integer());
}

TEST(HtjTest, SwappedLevelsNestTheOtherWay) {
  // Two-by-two column bicluster: after swapping, seasons become the roots.
  HeadingAxis rows{{Node("r")}, 1, {"row"}};
  HeadingAxis cols{{Node("2020", {Node("spr"), Node("aut")}),
                    Node("2021", {Node("spr"), Node("aut")})},
                   2,
                   {"year", "season"}};
  ValueGrid e(1, 4);
  for (std::size_t c = 0; c < 4; ++c) e(0, c) = Value::Number(double(c + 1));
  TableModel swapped = Swap(MakeModel(rows, cols, e), AxisKind::kCol, 1);
  json expected = json::parse(R"({
    "htj_version": 1,
    "level_names": {"row": ["row"], "column": ["season", "year"]},
    "row_headings": [{"label": "r"}],
    "column_headings": [
      {"label": "spr", "children": [{"label": "2020"}, {"label": "2021"}]},
      {"label": "aut", "children": [{"label": "2020"}, {"label": "2021"}]}
    ],
    "entries": [[1, 3, 2, 4]]
  })");
  EXPECT_EQ(SerializeHtj(swapped), expected);
}

TEST(HtjTest, MetaIsAcceptedAndDropped) {
  json j = SerializeHtj(testing::SeasonalFixture());
  j["meta"] = {{"source", "survey"}};
  EXPECT_TRUE(Equivalent(ParseHtj(j), testing::SeasonalFixture()));
  j["meta"] = 3;
  EXPECT_EQ(ErrorOf([&] { ParseHtj(j); }).code(), ErrorCode::kSchemaError);
}

TEST(HtjTest, SchemaErrorsCarryAPointer) {
  json base = SerializeHtj(testing::SeasonalFixture());
  struct Case {
    std::function<void(json&)> mutate;
    std::string pointer;
  };
  std::vector<Case> cases = {
      {[](json& j) { j["htj_version"] = 2; }, "/htj_version"},
      {[](json& j) { j.erase("entries"); }, "/entries"},
      {[](json& j) { j["entries"][2].erase(0); }, "/entries/2"},
      {[](json& j) { j["entries"][0][0] = true; }, "/entries/0/0"},
      {[](json& j) { j["row_headings"][0]["label"] = 4; },
       "/row_headings/0/label"},
      {[](json& j) { j["column_headings"][0]["children"][0]["derived"] = "mode"; },
       "/column_headings/0/children/0/derived"},
      {[](json& j) { j["level_names"]["row"] = {"a"}; }, "/level_names/row"},
      {[](json& j) { j["extra"] = 1; }, "/extra"},
      {[](json& j) { j["column_headings"][0]["children"] = json::array(); },
       "/column_headings/0/children"},
  };
  for (auto& c : cases) {
    json j = base;
    c.mutate(j);
    Error e = ErrorOf([&] { ParseHtj(j); });
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError) << c.pointer;
    EXPECT_EQ(e.detail().value("pointer", std::string("?")), c.pointer);
  }
}

TEST(HtjTest, StructuralViolationsAreSchemaErrors) {
  json j = SerializeHtj(testing::SeasonalFixture());
  j["row_headings"][0]["children"][1]["label"] = "CHN";  // duplicate sibling
  EXPECT_EQ(ErrorOf([&] { ParseHtj(j); }).code(), ErrorCode::kSchemaError);
  EXPECT_EQ(ErrorOf([] { ParseHtjText("{not json"); }).code(),
            ErrorCode::kSchemaError);
}

TEST(HtjTest, ModelSummary) {
  json s = ModelSummary(testing::SeasonalFixture());
  EXPECT_EQ(s["version"], 1);
  EXPECT_EQ(s["columns"]["structure"]["bicluster_from"], 1);
  EXPECT_TRUE(s["rows"]["structure"]["bicluster_from"].is_null());
  EXPECT_EQ(s["rows"]["leaf_count"], 8);
  EXPECT_EQ(s["rows"]["depth"], 3);
}

TEST(HtjTest, ValueJson) {
  EXPECT_EQ(ToJson(Value::Number(2.5)), 2.5);
  EXPECT_EQ(ToJson(Value::Number(-3)), -3);
  EXPECT_TRUE(ToJson(Value::Missing()).is_null());
  EXPECT_EQ(ToJson(Value::Text("x")), "x");
}

}  // namespace
}  // namespace htable
