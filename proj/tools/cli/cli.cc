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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "htable/error.h"
#include "htable/grid_doc.h"
#include "htable/htj.h"
#include "htable/locator.h"
#include "htable/ops.h"
#include "htable/recommend.h"
#include "htable/structure.h"
#include "htable/templates.h"
#include "htable/visgen.h"

namespace htable::cli {
namespace {

using nlohmann::json;

struct Failure {
  int code;
  std::string message;
};

std::string ReadText(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kParse, "cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw Failure{kUsage, "cannot write " + path};
}

json ParseJson(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Failure{kParse, what + " is not valid JSON"};
  return j;
}

std::string Describe(const Error& e) {
  return std::string(CodeName(e.code())) + ": " + e.message();
}

TableModel LoadModel(const std::string& path, std::istream& in) {
  json doc = ParseJson(ReadText(path, in), path);
  try {
    return ModelFromJson(doc);
  } catch (const Error& e) {
    throw Failure{kParse, Describe(e)};
  }
}

std::string AxisSummary(const char* name, const HeadingAxis& axis) {
  StructureAnnotation s = DetectStructure(axis);
  std::ostringstream line;
  line << name << " headings: depth " << axis.depth << ", "
       << axis.leaf_count() << " leaves, ";
  if (s.bicluster_from) {
    line << (std::string(name) == "row" ? "row" : "column")
         << " bicluster at level " << *s.bicluster_from;
  } else {
    line << "no bicluster";
  }
  return line.str() + "\n";
}

// "lo:hi" with either bound optional.
PriorityRange ParseRange(const std::string& text) {
  PriorityRange r;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Failure{kUsage, "range '" + text + "' must look like lo:hi"};
  }
  auto parse = [&](std::string_view part, int& v) {
    if (part.empty()) return;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size()) {
      throw Failure{kUsage, "range '" + text + "' must look like lo:hi"};
    }
  };
  std::string_view view(text);
  parse(view.substr(0, colon), r.lo);
  parse(view.substr(colon + 1), r.hi);
  return r;
}

struct ImportArgs {
  std::string in = "-";
  std::string out = "-";
};

int Import(const ImportArgs& a, std::istream& in, std::ostream& out,
           std::ostream& err) {
  TableModel model = LoadModel(a.in, in);
  WriteText(a.out, DumpHtj(model), out);
  std::ostream& log = a.out == "-" ? err : out;
  log << AxisSummary("row", model.row_axis)
      << AxisSummary("column", model.col_axis);
  return kOk;
}

struct GridArgs {
  std::string in = "-";
  std::string out = "-";
  std::string merges;
  std::size_t heading_rows = 1;
  std::size_t heading_cols = 1;
  std::vector<std::string> row_level_names;
  std::vector<std::string> col_level_names;
};

int GridFromCsv(const GridArgs& a, std::istream& in, std::ostream& out) {
  std::vector<MergeRange> merges;
  try {
    if (!a.merges.empty()) {
      merges = MergesFromJson(ParseJson(ReadText(a.merges, in), a.merges));
    }
    GridDoc doc = GridDocFromCsv(ReadText(a.in, in), merges, a.heading_rows,
                                 a.heading_cols);
    doc.row_level_names = a.row_level_names;
    doc.col_level_names = a.col_level_names;
    ParseGrid(doc);
    WriteText(a.out, ToJson(doc).dump(2) + "\n", out);
  } catch (const Error& e) {
    throw Failure{kParse, Describe(e)};
  }
  return kOk;
}

struct TransformArgs {
  std::string in = "-";
  std::string ops;
  std::string out = "-";
};

int Transform(const TransformArgs& a, std::istream& in, std::ostream& out,
              std::ostream& err) {
  TableModel model = LoadModel(a.in, in);
  std::vector<TransformOp> ops;
  try {
    ops = ScriptFromJson(ParseJson(ReadText(a.ops, in), a.ops));
  } catch (const Error& e) {
    throw Failure{kParse, Describe(e)};
  }
  ScriptResult result = ApplyScript(model, ops);
  if (!result.ok()) {
    err << CodeName(result.error->code()) << " at op " << *result.failed_index
        << ": " << result.error->message() << "\n";
    return kTransform;
  }
  WriteText(a.out, DumpHtj(result.model), out);
  return kOk;
}

struct QueryArgs {
  std::string in = "-";
  std::string unit;
  std::string config;
  std::string mechanism = "topology";
  std::string row_range;
  std::string col_range;
  std::string out;
};

TableUnit LoadUnit(const TableModel& model, const QueryArgs& a,
                   std::istream& in) {
  json j = ParseJson(ReadText(a.unit, in), a.unit);
  // A bare [row, col] pair of locators is accepted as shorthand.
  if (j.is_array() && j.size() == 2) j = json{{"row", j[0]}, {"col", j[1]}};
  return UnitFromJson(model, j);
}

Mechanism ParseMech(const std::string& name) {
  auto m = ParseMechanism(name);
  if (!m) throw Failure{kUsage, "mechanism must be topology or name"};
  return *m;
}

int RecommendCmd(const QueryArgs& a, std::istream& in, std::ostream& out) {
  TableModel model = LoadModel(a.in, in);
  const Mechanism mech = ParseMech(a.mechanism);
  PriorityRange rows = a.row_range.empty() ? PriorityRange{} : ParseRange(a.row_range);
  PriorityRange cols = a.col_range.empty() ? PriorityRange{} : ParseRange(a.col_range);
  json recs = json::array();
  for (const auto& r : Recommend(model, LoadUnit(model, a, in), mech, rows, cols)) {
    recs.push_back(ToJson(r));
  }
  WriteText(a.out.empty() ? "-" : a.out, recs.dump(2) + "\n", out);
  return kOk;
}

int Vis(const QueryArgs& a, std::istream& in, std::ostream& out) {
  TableModel model = LoadModel(a.in, in);
  TableUnit unit = LoadUnit(model, a, in);
  VisConfig config = VisConfigFromJson(ParseJson(ReadText(a.config, in), a.config));
  std::vector<TableUnit> units;
  if (a.row_range.empty() && a.col_range.empty()) {
    units.push_back(unit);
  } else {
    PriorityRange rows = a.row_range.empty() ? PriorityRange{0, 0} : ParseRange(a.row_range);
    PriorityRange cols = a.col_range.empty() ? PriorityRange{0, 0} : ParseRange(a.col_range);
    for (auto& r : Recommend(model, unit, ParseMech(a.mechanism), rows, cols)) {
      units.push_back(std::move(r.unit));
    }
  }
  std::vector<VisGrammarDoc> docs = RebindAll(model, config, units);
  if (a.out == "-") {
    json all = json::array();
    for (const auto& d : docs) all.push_back(d.doc);
    out << all.dump(2) << "\n";
    return kOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(a.out, ec);
  if (ec) throw Failure{kUsage, "cannot create " + a.out};
  for (const auto& d : docs) {
    const std::string name = "unit-" + std::to_string(d.unit.block.row_start) +
                             "-" + std::to_string(d.unit.block.col_start) +
                             ".vl.json";
    WriteText((std::filesystem::path(a.out) / name).string(), DumpDoc(d), out);
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical table transformation and visualization"};
  app.require_subcommand(1);

  ImportArgs import_args;
  auto* import = app.add_subcommand("import", "Parse a grid or HTJ table into HTJ");
  import->add_option("--in", import_args.in, "Grid or HTJ JSON, - for stdin");
  import->add_option("--out", import_args.out, "HTJ output, - for stdout");

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid-from-csv", "Build a grid document from CSV");
  grid->add_option("--in", grid_args.in, "CSV file, - for stdin");
  grid->add_option("--merges", grid_args.merges, "JSON list of merged ranges");
  grid->add_option("--heading-rows", grid_args.heading_rows)->required();
  grid->add_option("--heading-cols", grid_args.heading_cols)->required();
  grid->add_option("--row-level-names", grid_args.row_level_names)->delimiter(',');
  grid->add_option("--col-level-names", grid_args.col_level_names)->delimiter(',');
  grid->add_option("--out", grid_args.out, "Grid JSON output, - for stdout");

  TransformArgs transform_args;
  auto* transform = app.add_subcommand("transform", "Apply an op script");
  transform->add_option("--in", transform_args.in, "HTJ input, - for stdin");
  transform->add_option("--ops", transform_args.ops, "JSON op list")->required();
  transform->add_option("--out", transform_args.out, "HTJ output, - for stdout");

  QueryArgs rec_args;
  auto* recommend = app.add_subcommand("recommend", "List related units");
  recommend->add_option("--in", rec_args.in, "HTJ input");
  recommend->add_option("--unit", rec_args.unit, "Unit JSON")->required();
  recommend->add_option("--mechanism", rec_args.mechanism, "topology or name");
  recommend->add_option("--row-range", rec_args.row_range, "lo:hi");
  recommend->add_option("--col-range", rec_args.col_range, "lo:hi");
  recommend->add_option("--out", rec_args.out, "JSON output");

  QueryArgs vis_args;
  auto* vis = app.add_subcommand("vis", "Emit Vega-Lite documents");
  vis->add_option("--in", vis_args.in, "HTJ input");
  vis->add_option("--unit", vis_args.unit, "Unit JSON")->required();
  vis->add_option("--config", vis_args.config, "Vis config JSON")->required();
  vis->add_option("--mechanism", vis_args.mechanism, "topology or name");
  vis->add_option("--row-range", vis_args.row_range, "lo:hi");
  vis->add_option("--col-range", vis_args.col_range, "lo:hi");
  vis->add_option("--out", vis_args.out, "Output directory, - for stdout")
      ->required();

  app.add_subcommand("templates", "Print the template catalog");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*import) return Import(import_args, in, out, err);
    if (*grid) return GridFromCsv(grid_args, in, out);
    if (*transform) return Transform(transform_args, in, out, err);
    if (*recommend) return RecommendCmd(rec_args, in, out);
    if (*vis) return Vis(vis_args, in, out);
    out << CatalogJson().dump(2) << "\n";
    return kOk;
  } catch (const Failure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << Describe(e) << "\n";
    return kValidation;
  }
}

}  // namespace htable::cli
