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

#include "service.h"

#include <filesystem>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "fixture.h"
#include "htable/htj.h"
#include "htable/ops.h"

namespace htable::service {
namespace {

using nlohmann::json;
using testing::DataPath;
using testing::ReadFile;

class ServiceTest : public ::testing::Test {
 protected:
  Response Call(const std::string& method, const std::string& path,
                const json& body = nullptr,
                std::map<std::string, std::string> query = {}) {
    Request r{method, path, std::move(query),
              body.is_null() ? "" : body.dump()};
    return service_.Handle(r);
  }

  std::string Upload(const std::string& file = "seasonal.grid.json") {
    Response r = Call("POST", "/tables", json::parse(ReadFile(DataPath(file))));
    EXPECT_EQ(r.status, 201) << r.body.dump();
    return r.body["session_id"].get<std::string>();
  }

  static std::string Code(const Response& r) {
    return r.body["error"]["code"].get<std::string>();
  }

  Service service_;
};

TEST_F(ServiceTest, UploadReportsStructure) {
  Response r = Call("POST", "/tables",
                    json::parse(ReadFile(DataPath("seasonal.grid.json"))));
  ASSERT_EQ(r.status, 201);
  const json& s = r.body["summary"];
  EXPECT_EQ(s["columns"]["structure"]["bicluster_from"], 1);
  EXPECT_EQ(s["rows"]["depth"], 3);
  EXPECT_EQ(s["rows"]["leaf_count"], 8);
  EXPECT_EQ(r.body["version"], 1);
}

TEST_F(ServiceTest, UploadErrors) {
  json grid = json::parse(ReadFile(DataPath("seasonal.grid.json")));
  grid["cells"].push_back({{"row", 0}, {"col", 3}, {"text", "dup"}});
  Response r = Call("POST", "/tables", grid);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(Code(r), "OverlapError");

  Request bad{"POST", "/tables", {}, "{not json"};
  EXPECT_EQ(service_.Handle(bad).status, 400);

  EXPECT_EQ(Call("GET", "/tables").status, 405);
  EXPECT_EQ(Call("GET", "/nowhere").status, 404);
}

TEST_F(ServiceTest, TableSizeLimit) {
  Service small(Options{10, ""});
  Request r{"POST", "/tables", {}, ReadFile(DataPath("seasonal.grid.json"))};
  Response res = small.Handle(r);
  EXPECT_EQ(res.status, 413);
  EXPECT_EQ(res.body["error"]["code"], "TableTooLarge");
  EXPECT_EQ(small.session_count(), 0u);
}

TEST_F(ServiceTest, HtjRoundTripsThroughExport) {
  const std::string id = Upload("seasonal.htj.json");
  Response r = Call("GET", "/tables/" + id + "/export", nullptr,
                    {{"format", "htj"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body, SerializeHtj(ParseHtjText(
                        ReadFile(DataPath("seasonal.htj.json")))));
  EXPECT_EQ(Call("GET", "/tables/" + id).body["model"], r.body);
}

TEST_F(ServiceTest, TransformUndoRedo) {
  const std::string id = Upload();
  const std::string base = "/tables/" + id;
  Response r = Call("POST", base + "/transform",
                    {{"op", "swap"}, {"axis", "col"}, {"upper_level", 1}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body["version"], 2);

  r = Call("POST", base + "/transform",
           {{"op", "swap"}, {"axis", "row"}, {"upper_level", 2}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(Code(r), "NotUniform");
  r = Call("POST", base + "/transform", {{"op", "spin"}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(Code(r), "InvalidOp");

  r = Call("POST", base + "/undo");
  EXPECT_EQ(r.body["version"], 1);
  EXPECT_TRUE(r.body["can_redo"].get<bool>());
  r = Call("POST", base + "/undo");
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(Code(r), "EmptyHistory");
  r = Call("POST", base + "/redo");
  EXPECT_EQ(r.body["version"], 2);
  EXPECT_EQ(Call("GET", base + "/history").body["ops"].size(), 1u);
}

TEST_F(ServiceTest, UnknownSessionIs404) {
  EXPECT_EQ(Call("GET", "/tables/nope").status, 404);
  EXPECT_EQ(Call("POST", "/tables/nope/transform", {{"op", "fold"}}).status,
            404);
  EXPECT_EQ(Call("GET", "/tables/nope/export").status, 404);
  const std::string id = Upload();
  EXPECT_EQ(Call("DELETE", "/tables/" + id).status, 204);
  EXPECT_EQ(Call("GET", "/tables/" + id).status, 404);
}

TEST_F(ServiceTest, Recommend) {
  const std::string base = "/tables/" + Upload() + "/recommend";
  const std::string sha = R"([["Asia","CHN","SHA"]])";
  const std::string spr = R"([["2020","spr"]])";
  Response r = Call("GET", base, nullptr,
                    {{"row", sha}, {"col", spr}, {"mechanism", "topology"},
                     {"row_lo", "0"}, {"row_hi", "1"},
                     {"col_lo", "0"}, {"col_hi", "0"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body["count"], 2);
  EXPECT_EQ(r.body["recommendations"][0]["row_locator"], json::parse(sha));
  EXPECT_EQ(r.body["recommendations"][1]["row_priority"], 1);

  r = Call("GET", base, nullptr, {{"row", R"([["Asia","CHN","XXX"]])"}, {"col", spr}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(Code(r), "UnknownLabel");
  r = Call("GET", base, nullptr, {{"row", spr}, {"col", spr}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(Code(r), "InvalidLocator");
  r = Call("GET", base, nullptr, {{"row", "[["}, {"col", spr}});
  EXPECT_EQ(r.status, 400);

  // PAR..LON crosses the FRA/GBR boundary.
  const std::string cross =
      R"([["Europe","FRA","MRS"],["Europe","GBR","LON"]])";
  r = Call("GET", base, nullptr, {{"row", cross}, {"col", spr}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(Code(r), "NoRecommendation");

  r = Call("GET", base, nullptr,
           {{"row", sha}, {"col", spr}, {"mechanism", "name"}});
  ASSERT_EQ(r.status, 200);
  std::set<int> seen;
  for (const auto& rec : r.body["recommendations"]) {
    seen.insert(rec["col_priority"].get<int>());
  }
  EXPECT_EQ(seen, (std::set<int>{0, 1, 2}));
  EXPECT_EQ(Call("GET", base, nullptr,
                 {{"row", sha}, {"col", spr}, {"mechanism", "magic"}})
                .status,
            400);
}

json Loc(const char* text) { return json::parse(text); }

json StackedBar() {
  return {{"template", "stacked_bar"},
          {"bindings",
           {{"x", "x_nominal"}, {"height", "value"}, {"color", "y_nominal"}}}};
}

TEST_F(ServiceTest, VisualizeRecommended) {
  const std::string base = "/tables/" + Upload();
  json body{{"unit", {{"row", Loc(R"([["Europe","FRA","*"]])")},
                     {"col", Loc(R"([["2021","*"]])")}}},
            {"config", StackedBar()},
            {"apply_to", "recommended"},
            {"mechanism", "topology"},
            {"name", "bars"}};
  Response r = Call("POST", base + "/visualize", body);
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body["count"], 8);
  for (const auto& d : r.body["docs"]) {
    EXPECT_EQ(d["doc"]["usermeta"]["_htable"]["template"], "stacked_bar");
  }

  body["config"]["bindings"]["x"] = "y_nominal";
  body["config"]["bindings"]["color"] = "x_nominal";
  r = Call("POST", base + "/visualize", body);
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(Code(r), "ForbiddenBinding");

  Response bundle = Call("GET", base + "/export", nullptr, {{"format", "bundle"}});
  ASSERT_EQ(bundle.status, 200);
  EXPECT_EQ(bundle.body["configs"].size(), 1u);
  EXPECT_EQ(bundle.body["docs"]["bars"].size(), 8u);
}

TEST_F(ServiceTest, UnitTemplatesShareOneScale) {
  const std::string base = "/tables/" + Upload();
  json body{{"unit", {{"row", Loc(R"([["Asia","CHN","SHA"]])")},
                     {"col", Loc(R"([["2020","spr"]])")}}},
            {"config", {{"template", "unit_color"}, {"bindings", {{"color", "value"}}}}},
            {"apply_to", "recommended"},
            {"ranges", {{"row", {0, 1}}, {"col", {0, 0}}}}};
  Response r = Call("POST", base + "/visualize", body);
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body["count"], 2);
  const json& a = r.body["docs"][0]["doc"]["usermeta"]["_htable"]["normalization"];
  const json& b = r.body["docs"][1]["doc"]["usermeta"]["_htable"]["normalization"];
  EXPECT_FALSE(a.is_null());
  EXPECT_EQ(a, b);
}

TEST_F(ServiceTest, SelectionsFeedRecommendAndVisualize) {
  const std::string base = "/tables/" + Upload();
  Response r = Call("POST", base + "/selections",
                    {{"name", "fra"},
                     {"row", Loc(R"([["Europe","FRA","*"]])")},
                     {"col", Loc(R"([["2021","*"]])")}});
  ASSERT_EQ(r.status, 201) << r.body.dump();
  r = Call("GET", base + "/recommend", nullptr, {{"selection", "fra"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["count"], 8);
  EXPECT_EQ(Call("GET", base + "/recommend", nullptr, {{"selection", "x"}}).status,
            404);
}

TEST_F(ServiceTest, BundleImportReplaysHistory) {
  const std::string base = "/tables/" + Upload();
  Call("POST", base + "/transform", {{"op", "swap"}, {"axis", "col"}, {"upper_level", 1}});
  Call("POST", base + "/transform", {{"op", "transpose_table"}});
  json bundle = Call("GET", base + "/export", nullptr, {{"format", "bundle"}}).body;
  ASSERT_EQ(bundle["ops"].size(), 2u);

  Response r = Call("POST", "/tables", bundle);
  ASSERT_EQ(r.status, 201) << r.body.dump();
  const std::string copy = "/tables/" + r.body["session_id"].get<std::string>();
  EXPECT_EQ(r.body["version"], 3);
  EXPECT_EQ(Call("GET", copy + "/export").body, bundle["model"]);

  bundle["ops"].erase(1);
  r = Call("POST", "/tables", bundle);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(Code(r), "SchemaError");
}

TEST_F(ServiceTest, ReadsAreStable) {
  const std::string base = "/tables/" + Upload();
  Response a = Call("GET", base + "/export", nullptr, {{"format", "bundle"}});
  Response b = Call("GET", base + "/export", nullptr, {{"format", "bundle"}});
  EXPECT_EQ(a.body.dump(), b.body.dump());
  EXPECT_EQ(Call("GET", base + "/export", nullptr, {{"format", "png"}}).status,
            400);
}

TEST_F(ServiceTest, ConcurrentWritesAreSerialized) {
  const std::string base = "/tables/" + Upload();
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) {
        Call("POST", base + "/transform",
             {{"op", "swap"}, {"axis", "col"}, {"upper_level", 1}});
        Call("GET", base + "/recommend", nullptr,
             {{"row", R"([["Asia","*"]])"}, {"col", R"([["2020","*"]])"}});
      }
    });
  }
  for (auto& t : threads) t.join();
  Response r = Call("GET", base + "/history");
  EXPECT_EQ(r.body["ops"].size(), 80u);
  EXPECT_EQ(r.body["version"], 81);
}

TEST_F(ServiceTest, SnapshotsRestoreSessions) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("htable-snap-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::string id;
  json model;
  {
    Service s(Options{1'000'000, dir.string()});
    Request up{"POST", "/tables", {}, ReadFile(DataPath("seasonal.grid.json"))};
    id = s.Handle(up).body["session_id"].get<std::string>();
    s.Handle({"POST", "/tables/" + id + "/transform", {},
              R"({"op":"swap","axis":"col","upper_level":1})"});
    model = s.Handle({"GET", "/tables/" + id + "/export", {}, ""}).body;
    EXPECT_EQ(s.SaveSnapshots(), 1u);
  }
  Service restored(Options{1'000'000, dir.string()});
  EXPECT_EQ(restored.LoadSnapshots(), 1u);
  Response r = restored.Handle({"GET", "/tables/" + id + "/export", {}, ""});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body, model);
  std::filesystem::remove_all(dir);
}

TEST_F(ServiceTest, Templates) {
  Response r = Call("GET", "/templates");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.size(), 16u);
}

}  // namespace
}  // namespace htable::service
