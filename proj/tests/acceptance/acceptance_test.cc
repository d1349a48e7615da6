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

// Runs every primary acceptance criterion and prints one PASS/FAIL line for
// each. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "fixture.h"
#include "htable/error.h"
#include "htable/grid_doc.h"
#include "htable/htj.h"
#include "htable/locator.h"
#include "htable/ops.h"
#include "htable/recommend.h"
#include "htable/structure.h"
#include "htable/templates.h"
#include "htable/transform.h"
#include "htable/visgen.h"
#include "http.h"
#include "laws.h"
#include "oracles.h"
#include "random_tables.h"
#include "service.h"
#include "vis_configs.h"
#include "vl_validate.h"

namespace htable::acceptance {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kParitySeconds = 1.0;
constexpr std::size_t kLawTables = 500;
constexpr double kLawSeconds = 60.0;
constexpr std::size_t kRecommendTables = 500;
constexpr double kOperatorMillis = 100.0;
constexpr double kScalingRatio = 4.5;
constexpr int kTimingRuns = 15;
constexpr double kScenarioSeconds = 5.0;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failed checks of one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string Failures() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome FromChecker(const Checker& c, const std::string& detail) {
  return {c.ok(), c.ok() ? detail : c.Failures()};
}

std::vector<std::string> ChildNames(const HeadingNode& n) {
  std::vector<std::string> out;
  for (const auto& c : n.children) out.push_back(c.label.name);
  return out;
}

Outcome FixtureParity() {
  const auto start = Clock::now();
  Checker c;
  TableModel m = ParseGrid(GridDocFromJson(
      json::parse(testing::ReadFile(testing::DataPath("seasonal.grid.json")))));

  HeadingAxis rows;
  rows.roots = {
      Node("Asia", {Node("CHN", {Node("PEK"), Node("SHA")}),
                    Node("JPN", {Node("OSA"), Node("TKY")})}),
      Node("Europe", {Node("FRA", {Node("PAR"), Node("MRS")}),
                      Node("GBR", {Node("LON"), Node("LIV")})})};
  rows.depth = 3;
  rows.level_names = {"region", "country", "city"};
  c.Expect(Equivalent(m.row_axis, rows), "row forest differs");

  StructureAnnotation s = DetectStructure(m.col_axis);
  c.Expect(s.bicluster_from == 1, "columns are not a bicluster from level 1");
  std::vector<std::string> years;
  for (const auto& r : m.col_axis.roots) {
    years.push_back(r.label.name);
    c.Expect(ChildNames(r) == std::vector<std::string>{"&", "spr", "aut"},
             "season list under " + r.label.name);
  }
  c.Expect(years == std::vector<std::string>{"2020", "2021"}, "year list");

  Locator row{{{{"Asia", "CHN", "SHA"}, false}}};
  Locator col{{{{"2020", "spr"}, false}}};
  Block b = ResolveLocator(m, row, col);
  c.Expect(b.rows() == 1 && b.cols() == 1, "locator is not one cell");
  c.Expect(m.entries(b.row_start, b.col_start) == Value::Number(131),
           "cell is not 131");
  const double secs = Seconds(start);
  c.Expect(secs < kParitySeconds, "took " + std::to_string(secs) + " s");
  return FromChecker(c, "exact match, 131 at (" + std::to_string(b.row_start) +
                            "," + std::to_string(b.col_start) + "), " +
                            std::to_string(secs * 1000) + " ms");
}

Descriptor Desc(const TableModel& m, AxisKind axis,
                std::vector<std::string> labels) {
  return DescriptorOf(m, axis, Locator{{{std::move(labels), false}}});
}

Outcome PriorityReproduction() {
  Checker c;
  TableModel m = testing::SeasonalFixture();
  Descriptor sha = Desc(m, AxisKind::kRow, {"Asia", "CHN", "SHA"});
  auto topo = [&](std::vector<std::string> labels) {
    Descriptor d = Desc(m, AxisKind::kRow, std::move(labels));
    const int got = TopoPriority(m, sha, d);
    const int oracle = testing::BruteTopoPriority(m.row_axis, sha.nodes[0], d.nodes[0]);
    c.Expect(got == oracle, d.names[0] + " disagrees with the LCA oracle");
    return got;
  };
  const int tky = topo({"Asia", "JPN", "TKY"});
  const int pek = topo({"Asia", "CHN", "PEK"});
  const int par = topo({"Europe", "FRA", "PAR"});
  c.Expect(tky == 2, "TKY = " + std::to_string(tky));
  c.Expect(pek == 1, "PEK = " + std::to_string(pek));
  c.Expect(par == 3, "PAR = " + std::to_string(par));

  Descriptor spr = Desc(m, AxisKind::kCol, {"2020", "spr"});
  const int spr21 = NamePriority(spr, Desc(m, AxisKind::kCol, {"2021", "spr"}));
  const int aut20 = NamePriority(spr, Desc(m, AxisKind::kCol, {"2020", "aut"}));
  const int aut21 = NamePriority(spr, Desc(m, AxisKind::kCol, {"2021", "aut"}));
  c.Expect(spr21 == 1, "spr(2021) = " + std::to_string(spr21));
  c.Expect(aut20 == 2 && aut21 == 2, "aut != 2");
  return FromChecker(c, "TKY=2 PEK=1 PAR=3 (oracle agrees); spr(2021)=1 aut=2");
}

Outcome LawSuite() {
  const auto start = Clock::now();
  testing::LawReport report = testing::RunLawSuite(kLawTables, 20240);
  const double secs = Seconds(start);
  Checker c;
  c.Expect(report.tables >= kLawTables, "only " + std::to_string(report.tables) + " tables");
  c.Expect(report.failures() == 0,
           std::to_string(report.failures()) + " failures: " +
               (report.messages.empty() ? "" : report.messages.front()));
  for (const char* law : {"swap_involution", "transpose_table_involution",
                          "linear_stacked_inverse", "fold_unfold_inverse",
                          "locator_round_trip", "conservation"}) {
    auto it = report.laws.find(law);
    c.Expect(it != report.laws.end() && it->second.checks > 0,
             std::string(law) + " never exercised");
  }
  c.Expect(secs < kLawSeconds, "took " + std::to_string(secs) + " s");
  return FromChecker(c, report.Summary() + "; " + std::to_string(secs) + " s");
}

Outcome RecommendationProperties() {
  testing::LawReport report =
      testing::RunRecommendationSuite(kRecommendTables, 70707);
  Checker c;
  c.Expect(report.failures() == 0,
           std::to_string(report.failures()) + " failures: " +
               (report.messages.empty() ? "" : report.messages.front()));
  return FromChecker(c, report.Summary());
}

std::vector<std::string> EmitAll(const TableModel& m, Checker& c,
                                 std::size_t& forbidden) {
  std::vector<std::string> docs;
  for (const auto& tmpl : TemplateCatalog()) {
    for (const auto& config : testing::AllConfigs(tmpl)) {
      const bool breaks = testing::BreaksOrientation(tmpl, config);
      try {
        VisGrammarDoc d = EmitSpec(m, testing::UnitFor(m, tmpl, config), config);
        c.Expect(!breaks, tmpl.id + " accepted " + ToJson(config).dump());
        c.Expect(!testing::EncodingCrossesAxes(d.doc),
                 tmpl.id + " crosses axes: " + ToJson(config).dump());
        docs.push_back(DumpDoc(d));
      } catch (const Error& e) {
        if (breaks) {
          c.Expect(e.code() == ErrorCode::kForbiddenBinding,
                   tmpl.id + " raised " + std::string(CodeName(e.code())));
          ++forbidden;
        }
      }
    }
  }
  return docs;
}

Outcome EmissionValidity() {
  Checker c;
  TableModel m = testing::SeasonalFixture();
  std::size_t forbidden = 0;
  std::vector<std::string> first = EmitAll(m, c, forbidden);
  std::size_t ignored = 0;
  Checker second_run;
  std::vector<std::string> second = EmitAll(m, second_run, ignored);
  c.Expect(first == second, "bytes differ between runs");
  c.Expect(forbidden > 0, "no forbidden binding exercised");
  testing::SchemaReport schema = testing::ValidateVegaLite(first);
  c.Expect(schema.ok, "schema: " + schema.output.substr(0, 300));
  return FromChecker(c, std::to_string(first.size()) + " docs valid over " +
                            std::to_string(TemplateCatalog().size()) +
                            " templates; " + std::to_string(forbidden) +
                            " forbidden configs rejected; deterministic");
}

double MinMillis(const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < kTimingRuns; ++i) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, Seconds(start) * 1000);
  }
  return best;
}

struct OperatorTiming {
  std::string name;
  double small_ms;
  double large_ms;
};

std::vector<OperatorTiming> TimeOperators() {
  const TableModel small = testing::GridTable(100, 100, 1);
  const TableModel large = testing::GridTable(200, 200, 2);
  struct Op {
    std::string name;
    std::function<TableModel(const TableModel&)> prepare;
    std::function<void(const TableModel&)> run;
  };
  auto same = [](const TableModel& m) { return m; };
  const std::vector<Op> ops = {
      {"swap", same, [](const TableModel& m) { Swap(m, AxisKind::kCol, 2); }},
      {"transpose_level", same,
       [](const TableModel& m) { TransposeLevel(m, AxisKind::kCol, 3); }},
      {"transpose_table", same, [](const TableModel& m) { TransposeTable(m); }},
      {"to_linear", same,
       [](const TableModel& m) { ToLinear(m, AxisKind::kCol, 2, Stat::kSum); }},
      {"to_stacked",
       [](const TableModel& m) { return ToLinear(m, AxisKind::kCol, 2, Stat::kSum); },
       [](const TableModel& m) { ToStacked(m, AxisKind::kCol, 2); }},
      {"fold", same, [](const TableModel& m) { Fold(m, 3); }},
      {"unfold", [](const TableModel& m) { return Fold(m, 3); },
       [](const TableModel& m) { Unfold(m, 0, 1, 3); }},
  };
  std::vector<OperatorTiming> out;
  for (const auto& op : ops) {
    const TableModel s = op.prepare(small);
    const TableModel l = op.prepare(large);
    out.push_back({op.name, MinMillis([&] { op.run(s); }),
                   MinMillis([&] { op.run(l); })});
  }
  return out;
}

Outcome Performance() {
  Checker c;
  std::ostringstream detail;
  detail.precision(3);
  for (const auto& t : TimeOperators()) {
    const double ratio = t.large_ms / std::max(t.small_ms, 1e-6);
    detail << t.name << " " << t.large_ms << " ms x" << ratio << "; ";
    c.Expect(t.large_ms < kOperatorMillis,
             t.name + " took " + std::to_string(t.large_ms) + " ms");
    c.Expect(ratio <= kScalingRatio,
             t.name + " 200/100 ratio " + std::to_string(ratio));
  }
  return FromChecker(c, detail.str());
}

// Uploads the fixture over HTTP and walks the authoring loop.
Outcome EndToEnd() {
  const auto start = Clock::now();
  Checker c;
  service::Service svc;
  httplib::Server server;
  service::MountRoutes(server, svc);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  auto post = [&](const std::string& path, const json& body) {
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) return std::make_pair(0, json());
    return std::make_pair(res->status, json::parse(res->body, nullptr, false));
  };
  auto get = [&](const std::string& path, const httplib::Params& params) {
    auto res = client.Get(path, params, httplib::Headers{});
    if (!res) return std::make_pair(0, json());
    return std::make_pair(res->status, json::parse(res->body, nullptr, false));
  };

  std::string detail;
  auto scenario = [&] {
    auto [st, up] = post("/tables", json::parse(testing::ReadFile(
                                        testing::DataPath("seasonal.grid.json"))));
    c.Expect(st == 201, "upload status " + std::to_string(st));
    if (st != 201) return;
    const std::string base = "/tables/" + up["session_id"].get<std::string>();
    const json swap{{"op", "swap"}, {"axis", "col"}, {"upper_level", 1}};
    auto [st1, sw] = post(base + "/transform", swap);
    c.Expect(st1 == 200 && sw["version"] == 2, "swap(col,1) failed");
    const json select{{"name", "fra"},
                      {"row", json::parse(R"([["Europe","FRA","*"]])")},
                      {"col", json::parse(R"([["2021","*"]])")}};
    // After one swap the years sit below the seasons, so (2021,*) names no
    // column subtree. A second swap restores the year-major layout while
    // keeping two ops in the history that the bundle must replay.
    auto [st_sel0, sel0] = post(base + "/selections", select);
    const std::string swapped_code =
        sel0.contains("error") ? sel0["error"]["code"].get<std::string>() : "none";
    auto [st2, sw2] = post(base + "/transform", swap);
    c.Expect(st2 == 200 && sw2["version"] == 3, "second swap failed");

    auto [st3, sel] = post(base + "/selections", select);
    c.Expect(st3 == 201, "select status " + std::to_string(st3));
    auto [st4, rec] = get(base + "/recommend",
                          {{"selection", "fra"}, {"mechanism", "topology"}});
    c.Expect(st4 == 200 && rec["count"] == 8,
             "recommend returned " + rec.value("count", json(-1)).dump());
    for (const auto& r : rec.value("recommendations", json::array())) {
      const json& b = r["block"];
      c.Expect(b["row_end"].get<int>() - b["row_start"].get<int>() == 2 &&
                   b["col_end"].get<int>() - b["col_start"].get<int>() == 3,
               "incongruent block " + b.dump());
    }
    const json vis{{"selection", "fra"},
                   {"config",
                    {{"template", "stacked_bar"},
                     {"bindings",
                      {{"x", "x_nominal"}, {"height", "value"}, {"color", "y_nominal"}}}}},
                   {"apply_to", "recommended"},
                   {"mechanism", "topology"},
                   {"name", "bars"}};
    auto [st5, docs] = post(base + "/visualize", vis);
    c.Expect(st5 == 200 && docs["count"] == 8, "visualize failed");
    std::set<std::string> channel_maps;
    for (const auto& d : docs.value("docs", json::array())) {
      json channels = json::object();
      for (const auto& [ch, enc] : d["doc"]["encoding"].items()) {
        channels[ch] = enc.is_object()
                           ? json{enc.value("field", ""), enc.value("type", "")}
                           : enc;
      }
      channel_maps.insert(channels.dump() +
                          d["doc"]["usermeta"]["_htable"]["bindings"].dump());
    }
    c.Expect(channel_maps.size() == 1,
             std::to_string(channel_maps.size()) + " distinct channel maps");

    auto [st6, bundle] = get(base + "/export", {{"format", "bundle"}});
    c.Expect(st6 == 200, "export failed");
    if (st6 != 200) return;
    ScriptResult replay = ApplyScript(ParseHtj(bundle["initial"]),
                                      ScriptFromJson(bundle["ops"]));
    c.Expect(replay.ok(), "replay failed");
    c.Expect(DumpHtj(replay.model) == DumpHtj(ParseHtj(bundle["model"])),
             "replayed model differs");
    c.Expect(bundle["ops"].size() == 2, "history has " +
                                            std::to_string(bundle["ops"].size()) +
                                            " ops");
    detail = "8 blocks, 8 docs, 1 channel map, bundle replays 2 ops; "
             "(2021,*) after a single swap: " + swapped_code;
  };
  try {
    scenario();
  } catch (const std::exception& e) {
    c.Expect(false, std::string("exception: ") + e.what());
  }
  server.stop();
  thread.join();
  const double secs = Seconds(start);
  c.Expect(secs < kScenarioSeconds, "took " + std::to_string(secs) + " s");
  return FromChecker(c, detail + "; " + std::to_string(secs) + " s");
}

}  // namespace
}  // namespace htable::acceptance

int main() {
  using namespace htable::acceptance;
  struct Criterion {
    const char* id;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"fixture_parity", FixtureParity},
      {"priority_reproduction", PriorityReproduction},
      {"algebraic_laws", LawSuite},
      {"recommendation_properties", RecommendationProperties},
      {"emission_validity", EmissionValidity},
      {"performance", Performance},
      {"end_to_end_api", EndToEnd},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Outcome o;
    try {
      o = crit.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << crit.id << ": " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " +
                                                          std::to_string(failed))
            << std::endl;
  return failed == 0 ? 0 : 1;
}
