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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixture.h"
#include "htable/htj.h"
#include "htable/transform.h"

namespace htable::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::DataPath;
using testing::ReadFile;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "htable");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("htable-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
    return Path(name);
  }

  std::string ImportFixture() {
    const std::string out = Path("seasonal.htj.json");
    Result r = RunCli({"import", "--in", DataPath("seasonal.grid.json"), "--out", out});
    EXPECT_EQ(r.code, kOk) << r.err;
    return out;
  }

  fs::path dir_;
};

TEST_F(CliTest, ImportWritesHtjAndSummary) {
  const std::string out = Path("t.htj.json");
  Result r = RunCli({"import", "--in", DataPath("seasonal.grid.json"), "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("column bicluster at level 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("row headings: depth 3, 8 leaves"), std::string::npos);
  EXPECT_TRUE(Equivalent(ParseHtjText(ReadFile(out)), testing::SeasonalFixture()));
}

TEST_F(CliTest, ImportIsByteStableOnHtj) {
  const std::string first = ImportFixture();
  const std::string second = Path("again.htj.json");
  ASSERT_EQ(RunCli({"import", "--in", first, "--out", second}).code, kOk);
  EXPECT_EQ(ReadFile(first), ReadFile(second));
}

TEST_F(CliTest, ImportStreamsThroughStdio) {
  Result r = RunCli({"import", "--in", "-", "--out", "-"},
                    ReadFile(DataPath("seasonal.grid.json")));
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, DumpHtj(testing::SeasonalFixture()));
  EXPECT_NE(r.err.find("column bicluster"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  EXPECT_EQ(RunCli({"import", "--in", Path("missing.json")}).code, kParse);
  Result r = RunCli({"import", "--in", Write("bad.json", "{\"cells\": 3}")});
  EXPECT_EQ(r.code, kParse);
  EXPECT_EQ(RunCli({"import", "--in", Write("bad2.json", "[1,")}).code, kParse);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(RunCli({}).code, kUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(RunCli({"transform", "--in", "x"}).code, kUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kOk);
}

TEST_F(CliTest, TransformInvolution) {
  const std::string in = ImportFixture();
  const std::string ops = Write("ops.json",
      R"([{"op":"swap","axis":"col","upper_level":1},)"
      R"( {"op":"swap","axis":"col","upper_level":1}])");
  const std::string out = Path("out.htj.json");
  Result r = RunCli({"transform", "--in", in, "--ops", ops, "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  // Versions differ, so compare models rather than bytes.
  EXPECT_TRUE(Equivalent(ParseHtjText(ReadFile(out)), ParseHtjText(ReadFile(in))));
}

TEST_F(CliTest, TransformToLinearAddsSums) {
  const std::string in = Path("stacked.htj.json");
  ASSERT_EQ(RunCli({"import", "--in", DataPath("seasonal_stacked.grid.json"),
                    "--out", in}).code, kOk);
  const std::string ops = Write("ops.json",
      R"([{"op":"to_linear","axis":"col","level":1,"stat":"sum"}])");
  Result r = RunCli({"transform", "--in", in, "--ops", ops, "--out", "-"});
  ASSERT_EQ(r.code, kOk) << r.err;
  TableModel m = ParseHtjText(r.out);
  ASSERT_EQ(m.entries.cols(), 6u);
  for (std::size_t row = 0; row < m.entries.rows(); ++row) {
    for (std::size_t y = 0; y < 2; ++y) {
      const Value& sum = m.entries(row, 3 * y);
      const Value& a = m.entries(row, 3 * y + 1);
      const Value& b = m.entries(row, 3 * y + 2);
      if (a.is_number() && b.is_number()) {
        EXPECT_DOUBLE_EQ(sum.number(), a.number() + b.number());
      }
    }
  }
  EXPECT_TRUE(m.col_axis.roots[0].children[0].label.is_derived());
}

TEST_F(CliTest, TransformFailureNamesTheOp) {
  const std::string in = ImportFixture();
  const std::string ops = Write("ops.json",
      R"([{"op":"swap","axis":"row","upper_level":2}])");
  Result r = RunCli({"transform", "--in", in, "--ops", ops, "--out", Path("x")});
  EXPECT_EQ(r.code, kTransform);
  EXPECT_EQ(r.err.rfind("NotUniform at op 0", 0), 0u) << r.err;
  EXPECT_FALSE(fs::exists(Path("x")));

  Result bad = RunCli({"transform", "--in", in, "--ops",
                       Write("bad.json", R"([{"op":"spin"}])")});
  EXPECT_EQ(bad.code, kParse);
}

TEST_F(CliTest, VisEnumeratesRecommendedUnits) {
  const std::string in = ImportFixture();
  const std::string unit = Write("unit.json",
      R"({"row": [["Asia","CHN","SHA"]], "col": [["2020","spr"]]})");
  const std::string config = Write("vis.json", R"({"template":"unit_color","bindings":{"color":"value"}})");
  const std::string out = Path("docs");
  Result r = RunCli({"vis", "--in", in, "--unit", unit, "--config", config,
                     "--mechanism", "topo", "--row-range", "0:3",
                     "--col-range", "0:2", "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out)) {
    ++files;
    EXPECT_EQ(e.path().string().substr(e.path().string().size() - 8), ".vl.json");
  }
  EXPECT_EQ(files, 48u);
  EXPECT_TRUE(fs::exists(fs::path(out) / "unit-1-1.vl.json"));
  EXPECT_TRUE(fs::exists(fs::path(out) / "unit-7-5.vl.json"));

  // Deterministic bytes across runs.
  const std::string again = Path("docs2");
  ASSERT_EQ(RunCli({"vis", "--in", in, "--unit", unit, "--config", config,
                    "--row-range", "0:3", "--col-range", "0:2", "--out", again})
                .code,
            kOk);
  for (const auto& e : fs::directory_iterator(out)) {
    EXPECT_EQ(ReadFile(e.path().string()),
              ReadFile((fs::path(again) / e.path().filename()).string()));
  }
}

TEST_F(CliTest, VisValidationErrorsExitFour) {
  const std::string in = ImportFixture();
  const std::string block = Write("block.json",
      R"({"row": [["Europe","FRA","*"]], "col": [["2021","*"]]})");
  Result r = RunCli({"vis", "--in", in, "--unit", block, "--config",
                     Write("bad.json", R"({"template":"stacked_bar",)"
                           R"("bindings":{"x":"y_nominal","height":"value"}})"),
                     "--out", Path("o")});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_NE(r.err.find("ForbiddenBinding"), std::string::npos) << r.err;

  r = RunCli({"vis", "--in", in, "--unit", block, "--config",
              Write("line.json", R"({"template":"line",)"
                    R"("bindings":{"x":"x_nominal","y":"value"}})"), "--out", Path("o")});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_NE(r.err.find("ShapeError"), std::string::npos) << r.err;
}

TEST_F(CliTest, RecommendPrintsPriorities) {
  const std::string in = ImportFixture();
  const std::string unit = Write("unit.json",
      R"([[["Europe","FRA","*"]], [["2021","*"]]])");
  Result r = RunCli({"recommend", "--in", in, "--unit", unit});
  ASSERT_EQ(r.code, kOk) << r.err;
  json recs = json::parse(r.out);
  ASSERT_EQ(recs.size(), 8u);
  EXPECT_EQ(recs[0]["row_priority"], 0);
  EXPECT_EQ(recs[0]["col_priority"], 0);
  EXPECT_EQ(RunCli({"recommend", "--in", in, "--unit", unit, "--row-range", "x"}).code,
            kUsage);
}

TEST_F(CliTest, GridFromCsv) {
  Result r = RunCli({"grid-from-csv", "--in", DataPath("seasonal.csv"),
                     "--merges", DataPath("seasonal.merges.json"),
                     "--heading-rows", "2", "--heading-cols", "3",
                     "--row-level-names", "region,country,city",
                     "--col-level-names", "year,season"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string grid = Write("grid.json", r.out);
  Result imported = RunCli({"import", "--in", grid, "--out", "-"});
  ASSERT_EQ(imported.code, kOk) << imported.err;
  EXPECT_TRUE(Equivalent(ParseHtjText(imported.out), testing::SeasonalFixture()));
}

#ifdef HTABLE_CLI_BINARY
TEST_F(CliTest, BinaryPipesStdinToStdout) {
  const std::string out = Path("piped.htj.json");
  const std::string cmd = std::string(HTABLE_CLI_BINARY) + " import --in - --out - < " +
                          DataPath("seasonal.grid.json") + " > " + out + " 2> " +
                          Path("err.txt");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(ReadFile(out), DumpHtj(testing::SeasonalFixture()));
  const std::string fail = std::string(HTABLE_CLI_BINARY) + " import --in " +
                           Path("nope.json") + " 2> " + Path("err.txt");
  int status = std::system(fail.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kParse);
}
#endif

}  // namespace
}  // namespace htable::cli
