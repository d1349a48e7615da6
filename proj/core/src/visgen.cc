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

#include "htable/visgen.h"

#include <algorithm>
#include <cmath>

#include "htable/axis_index.h"
#include "htable/error.h"
#include "htable/htj.h"

namespace htable {
namespace {

using nlohmann::json;

constexpr const char* kSchemaUrl =
    "https://vega.github.io/schema/vega-lite/v5.json";
constexpr const char* kBottomLabelExpr = "peek(split(datum.value, ' / '))";

[[noreturn]] void Forbidden(const std::string& channel, std::string_view role,
                            const std::string& why) {
  throw Error(ErrorCode::kForbiddenBinding,
              "cannot bind " + std::string(role) + " to '" + channel + "': " +
                  why,
              {{"channel", channel}, {"role", role}});
}

[[noreturn]] void ShapeFail(const std::string& what, const Block& b) {
  throw Error(ErrorCode::kShapeError, what,
              {{"rows", b.rows()}, {"cols", b.cols()}});
}

std::string OptionString(const VisConfig& config, const char* key,
                         const std::string& fallback) {
  auto it = config.options.find(key);
  if (it == config.options.end() || !it->is_string()) return fallback;
  return it->get<std::string>();
}

const Channel* PositionalChannel(const VisTemplate& t, Orientation o) {
  for (const auto& c : t.channels) {
    if (c.orientation == o) return &c;
  }
  return nullptr;
}

// VL encoding channel a template channel maps to.
std::string VlChannel(const std::string& name) {
  return name == "height" ? "y" : name;
}

// Field references treat '.', '[' and ']' as path syntax.
std::string EscapeField(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '.' || c == '[' || c == ']' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string JoinLevels(const HeadingAxis& axis) {
  return JoinPath(axis.level_names);
}

struct Context {
  const TableModel* model;
  const TableUnit* unit;
  const VisTemplate* tmpl;
  const Decomposition* decomp;
  std::map<std::string, Role> bindings;
  std::vector<std::string> row_paths;
  std::vector<std::string> col_paths;

  const char* NominalField(Role role) const {
    return role == Role::kXNominal ? "col_path" : "row_path";
  }
  const std::vector<std::string>& NominalSort(Role role) const {
    return role == Role::kXNominal ? col_paths : row_paths;
  }
  std::string NominalTitle(Role role) const {
    const HeadingAxis& axis =
        role == Role::kXNominal ? model->col_axis : model->row_axis;
    return axis.level_names.back();
  }

  json Nominal(Role role, bool legend) const {
    json enc{{"field", NominalField(role)},
             {"type", "nominal"},
             {"sort", NominalSort(role)},
             {"title", NominalTitle(role)}};
    enc[legend ? "legend" : "axis"] = {{"labelExpr", kBottomLabelExpr}};
    return enc;
  }

  json Tooltip() const {
    return json::array(
        {{{"field", "row_path"}, {"type", "nominal"},
          {"title", JoinLevels(model->row_axis)}},
         {{"field", "col_path"}, {"type", "nominal"},
          {"title", JoinLevels(model->col_axis)}},
         {{"field", "value"}, {"type", "quantitative"}, {"title", "value"}}});
  }

  std::optional<Role> Bound(const std::string& channel) const {
    auto it = bindings.find(channel);
    if (it == bindings.end()) return std::nullopt;
    return it->second;
  }

  // The horizontal/vertical channel names of the template and which of them
  // carries the nominal role.
  struct Pair {
    std::string nominal_channel, value_channel;
    Role nominal;
  };
  Pair PositionalPair() const {
    const Channel* h = PositionalChannel(*tmpl, Orientation::kHorizontal);
    const Channel* v = PositionalChannel(*tmpl, Orientation::kVertical);
    Role hr = *Bound(h->name);
    if (hr == Role::kValue) {
      return {VlChannel(v->name), VlChannel(h->name), *Bound(v->name)};
    }
    return {VlChannel(h->name), VlChannel(v->name), hr};
  }
};

json CellRows(const Context& ctx, std::optional<MinMaxScale> scale) {
  const Decomposition& d = *ctx.decomp;
  json rows = json::array();
  for (std::size_t r = 0; r < d.y_nominal.size(); ++r) {
    for (std::size_t c = 0; c < d.x_nominal.size(); ++c) {
      const Value& v = d.values(r, c);
      json row{{"x", d.x_nominal[c]},
               {"y", d.y_nominal[r]},
               {"value", ToJson(v)},
               {"row_path", ctx.row_paths[r]},
               {"col_path", ctx.col_paths[c]}};
      if (scale) {
        row["norm_value"] =
            v.is_number() ? json((*scale)(v.number())) : json(nullptr);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void CheckNumeric(const Decomposition& d) {
  for (const auto& v : d.values.data()) {
    if (v.is_text()) {
      throw Error(ErrorCode::kNonNumeric,
                  "text entry '" + v.text() + "' cannot be charted as a value",
                  {{"text", v.text()}});
    }
  }
}

void CheckShape(const Context& ctx) {
  const Block& b = ctx.unit->block;
  switch (ctx.tmpl->category) {
    case TemplateCategory::kUnit:
      if (b.rows() != 1 || b.cols() != 1) {
        ShapeFail(ctx.tmpl->id + " encodes a single cell", b);
      }
      break;
    case TemplateCategory::kTrend: {
      if (b.rows() != 1 && b.cols() != 1) {
        ShapeFail(ctx.tmpl->id + " needs one row or one column", b);
      }
      Role nominal = ctx.PositionalPair().nominal;
      if (b.rows() == 1 && b.cols() > 1 && nominal != Role::kXNominal) {
        ShapeFail(ctx.tmpl->id + " over one row runs along x_nominal", b);
      }
      if (b.cols() == 1 && b.rows() > 1 && nominal != Role::kYNominal) {
        ShapeFail(ctx.tmpl->id + " over one column runs along y_nominal", b);
      }
      break;
    }
    case TemplateCategory::kCorrelation:
      if (b.rows() < 2 || b.cols() < 2) {
        ShapeFail(ctx.tmpl->id + " needs at least two rows and two columns",
                  b);
      }
      break;
    case TemplateCategory::kOverview:
      break;
  }
}

json Quant(const std::string& field, const std::string& title) {
  return {{"field", field}, {"type", "quantitative"}, {"title", title}};
}

void EmitUnit(const Context& ctx, json& chart, const Geometry& g) {
  const std::string id = ctx.tmpl->id;
  json enc{{"tooltip", ctx.Tooltip()}};
  json norm{{"field", "norm_value"},
            {"type", "quantitative"},
            {"scale", {{"domain", {0, 1}}}}};
  if (id == "unit_color") {
    chart["mark"] = {{"type", "rect"}};
    norm["legend"] = nullptr;
    enc["color"] = norm;
  } else if (id == "unit_size") {
    chart["mark"] = {{"type", "circle"}};
    const double side = std::min(g.width, g.height);
    norm["scale"]["range"] = {0, side * side * 0.8};
    norm["legend"] = nullptr;
    enc["size"] = norm;
  } else {
    chart["mark"] = {{"type", "bar"}};
    norm["axis"] = nullptr;
    enc["x"] = norm;
  }
  chart["encoding"] = std::move(enc);
}

}  // namespace

Decomposition Decompose(const TableModel& model, const Block& block) {
  if (!model.Contains(block)) {
    throw Error(ErrorCode::kInvalidLocator, "block lies outside the table",
                ToJson(block));
  }
  Decomposition d;
  AxisIndex rows(model.row_axis), cols(model.col_axis);
  for (std::size_t r = block.row_start; r < block.row_end; ++r) {
    d.row_label_paths.push_back(rows.PathNames(rows.leaf(r)));
    d.y_nominal.push_back(d.row_label_paths.back().back());
  }
  for (std::size_t c = block.col_start; c < block.col_end; ++c) {
    d.col_label_paths.push_back(cols.PathNames(cols.leaf(c)));
    d.x_nominal.push_back(d.col_label_paths.back().back());
  }
  d.values = ValueGrid(block.rows(), block.cols());
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) {
      d.values(r, c) = model.entries(block.row_start + r, block.col_start + c);
    }
  }
  return d;
}

VisConfig VisConfigFromJson(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidOp, "a chart config must be an object");
  }
  VisConfig config;
  const char* key = j.contains("template") ? "template" : "template_id";
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::kUnknownTemplate, "config names no template");
  }
  config.template_id = j[key].get<std::string>();
  if (j.contains("bindings")) {
    if (!j["bindings"].is_object()) {
      throw Error(ErrorCode::kInvalidOp, "bindings must be an object");
    }
    for (const auto& [channel, role] : j["bindings"].items()) {
      auto parsed =
          role.is_string() ? ParseRole(role.get<std::string>()) : std::nullopt;
      if (!parsed) {
        Forbidden(channel, role.is_string() ? role.get<std::string>() : role.dump(),
                  "unknown role");
      }
      config.bindings[channel] = *parsed;
    }
  }
  if (j.contains("options")) {
    if (!j["options"].is_object()) {
      throw Error(ErrorCode::kInvalidOp, "options must be an object");
    }
    config.options = j["options"];
  }
  return config;
}

json ToJson(const VisConfig& config) {
  json bindings = json::object();
  for (const auto& [channel, role] : config.bindings) {
    bindings[channel] = RoleName(role);
  }
  return {{"template", config.template_id},
          {"bindings", std::move(bindings)},
          {"options", config.options}};
}

std::map<std::string, Role> EffectiveBindings(const VisTemplate& tmpl,
                                              const VisConfig& config) {
  std::map<std::string, Role> out = config.bindings;
  if (!tmpl.nominal_value_pair) return out;
  const Channel* h = PositionalChannel(tmpl, Orientation::kHorizontal);
  const Channel* v = PositionalChannel(tmpl, Orientation::kVertical);
  if (out.count(h->name) || out.count(v->name)) return out;
  const std::string by = OptionString(config, "aggregate", "");
  if (by == "columns") {
    out[h->name] = Role::kXNominal;
    out[v->name] = Role::kValue;
  } else if (by == "rows") {
    out[h->name] = Role::kValue;
    out[v->name] = Role::kYNominal;
  }
  return out;
}

void ValidateMapping(const VisTemplate& tmpl, const VisConfig& config,
                     const Decomposition& /*decomp*/) {
  const auto bindings = EffectiveBindings(tmpl, config);
  for (const auto& [channel, role] : bindings) {
    const Channel* c = tmpl.FindChannel(channel);
    if (!c) Forbidden(channel, RoleName(role), tmpl.id + " has no such channel");
    if (!c->Accepts(role)) {
      std::string why = c->orientation == Orientation::kHorizontal
                            ? "horizontal channels take x_nominal or value"
                        : c->orientation == Orientation::kVertical
                            ? "vertical channels take y_nominal or value"
                            : "not accepted by " + tmpl.id;
      Forbidden(channel, RoleName(role), why);
    }
  }
  for (const auto& c : tmpl.channels) {
    if (c.required && !bindings.count(c.name)) {
      throw Error(ErrorCode::kMissingChannel,
                  tmpl.id + " requires channel '" + c.name + "'",
                  {{"channel", c.name}});
    }
  }
  if (tmpl.nominal_value_pair) {
    const Channel* h = PositionalChannel(tmpl, Orientation::kHorizontal);
    const Channel* v = PositionalChannel(tmpl, Orientation::kVertical);
    const Role hr = bindings.at(h->name), vr = bindings.at(v->name);
    if ((hr == Role::kValue) == (vr == Role::kValue)) {
      Forbidden(v->name, RoleName(vr),
                tmpl.id + " needs a label role on one positional channel and "
                          "the value on the other");
    }
    const Role nominal = hr == Role::kValue ? vr : hr;
    const Channel* color = tmpl.FindChannel("color");
    auto it = bindings.find("color");
    if (color && color->required && it != bindings.end() &&
        it->second == nominal) {
      Forbidden("color", RoleName(it->second),
                "color must carry the other label role");
    }
  }
  if (tmpl.id == "scatterplot") {
    const std::string series = OptionString(config, "series", "columns");
    if (series != "columns" && series != "rows") {
      throw Error(ErrorCode::kInvalidOp,
                  "option series must be \"columns\" or \"rows\"");
    }
    auto it = bindings.find("color");
    const Role point_role =
        series == "columns" ? Role::kYNominal : Role::kXNominal;
    if (it != bindings.end() && it->second != point_role) {
      Forbidden("color", RoleName(it->second),
                "points of a " + series + "-series scatterplot are labeled by " +
                    std::string(RoleName(point_role)));
    }
  }
}

Geometry UnitGeometry(const Block& block, const CellGeometry& cells) {
  return {cells.origin_x + static_cast<double>(block.col_start) * cells.cell_width,
          cells.origin_y + static_cast<double>(block.row_start) * cells.cell_height,
          static_cast<double>(block.cols()) * cells.cell_width,
          static_cast<double>(block.rows()) * cells.cell_height};
}

json ToJson(const Geometry& g) {
  return {{"x", g.x}, {"y", g.y}, {"width", g.width}, {"height", g.height}};
}

VisGrammarDoc EmitSpec(const TableModel& model, const TableUnit& unit,
                       const VisConfig& config, const CellGeometry& cells,
                       std::optional<MinMaxScale> scale) {
  const VisTemplate& tmpl = FindTemplate(config.template_id);
  const Decomposition decomp = Decompose(model, unit.block);
  ValidateMapping(tmpl, config, decomp);

  Context ctx{&model, &unit, &tmpl, &decomp, EffectiveBindings(tmpl, config),
              {}, {}};
  for (const auto& p : decomp.row_label_paths) ctx.row_paths.push_back(JoinPath(p));
  for (const auto& p : decomp.col_label_paths) ctx.col_paths.push_back(JoinPath(p));
  CheckShape(ctx);
  CheckNumeric(decomp);

  const std::string& id = tmpl.id;
  if (id == "pie" || id == "radial") {
    for (const auto& v : decomp.values.data()) {
      if (v.is_number() && v.number() < 0) {
        throw Error(ErrorCode::kNegativeValue,
                    id + " cannot show negative values",
                    {{"value", v.number()}});
      }
    }
  }

  const Geometry geometry = UnitGeometry(unit.block, cells);
  json meta{{"geometry", ToJson(geometry)},
            {"template", id},
            {"unit", ToJson(unit)}};
  {
    json b = json::object();
    for (const auto& [channel, role] : ctx.bindings) b[channel] = RoleName(role);
    meta["bindings"] = std::move(b);
  }

  if (tmpl.category == TemplateCategory::kUnit && !scale) {
    std::vector<Value> own = decomp.values.data();
    bool numeric = std::any_of(own.begin(), own.end(),
                               [](const Value& v) { return v.is_number(); });
    if (numeric) scale = FitScale(own);
  }
  const bool unit_tmpl = tmpl.category == TemplateCategory::kUnit;
  json rows = CellRows(ctx, unit_tmpl ? scale : std::nullopt);
  if (unit_tmpl && scale) {
    meta["normalization"] = {{"min", scale->lo}, {"max", scale->hi}};
  }

  json chart{{"$schema", kSchemaUrl},
            {"width", geometry.width},
            {"height", geometry.height},
            {"autosize", {{"type", "fit"}, {"contains", "padding"}}}};

  if (unit_tmpl) {
    EmitUnit(ctx, chart, geometry);
    if (id == "unit_color") {
      chart["encoding"]["color"]["scale"]["scheme"] =
          OptionString(config, "scheme", "blues");
    }
  } else if (id == "heatmap") {
    chart["mark"] = {{"type", "rect"}};
    json color = Quant("value", "value");
    color["legend"] = {{"title", "value"}};
    color["scale"] = {{"scheme", OptionString(config, "scheme", "blues")}};
    chart["encoding"] = {{"x", ctx.Nominal(Role::kXNominal, false)},
                        {"y", ctx.Nominal(Role::kYNominal, false)},
                        {"color", color},
                        {"tooltip", ctx.Tooltip()}};
  } else if (id == "scatterplot") {
    const bool by_cols = OptionString(config, "series", "columns") == "columns";
    const auto& series = by_cols ? ctx.col_paths : ctx.row_paths;
    const char* series_field = by_cols ? "col_path" : "row_path";
    const char* point_field = by_cols ? "row_path" : "col_path";
    chart["transform"] = json::array(
        {{{"pivot", series_field},
          {"value", "value"},
          {"groupby", json::array({point_field})}}});
    chart["mark"] = {{"type", "point"}, {"filled", true}};
    json enc{{"x", Quant(EscapeField(series[0]), series[0])},
             {"y", Quant(EscapeField(series[1]), series[1])},
             {"tooltip",
              json::array({{{"field", point_field}, {"type", "nominal"}}})}};
    if (auto c = ctx.Bound("color")) enc["color"] = ctx.Nominal(*c, true);
    chart["encoding"] = std::move(enc);
    meta["series"] = series;
  } else if (id == "pie" || id == "radial") {
    const Role nominal = *ctx.Bound("color");
    const char* field = ctx.NominalField(nominal);
    chart["transform"] = json::array(
        {{{"aggregate",
           json::array({{{"op", "sum"}, {"field", "value"}, {"as", "total"}}})},
          {"groupby", json::array({field})}}});
    json theta = Quant("total", "value");
    theta["stack"] = true;
    json enc{{"theta", theta},
             {"color", ctx.Nominal(nominal, true)},
             {"tooltip", json::array({{{"field", field}, {"type", "nominal"}},
                                      {{"field", "total"},
                                       {"type", "quantitative"}}})}};
    if (id == "radial") {
      json radius = Quant("total", "value");
      radius["scale"] = {{"type", "sqrt"}, {"zero", true}};
      enc["radius"] = radius;
      chart["mark"] = {{"type", "arc"}, {"innerRadius", 4}};
    } else {
      chart["mark"] = {{"type", "arc"}};
    }
    chart["encoding"] = std::move(enc);
  } else if (id == "parallel_coordinates") {
    chart["transform"] = json::array(
        {{{"joinaggregate",
           json::array({{{"op", "min"}, {"field", "value"}, {"as", "col_min"}},
                        {{"op", "max"}, {"field", "value"}, {"as", "col_max"}}})},
          {"groupby", json::array({"col_path"})}},
         {{"calculate",
           "datum.col_max == datum.col_min ? 0.5 : (datum.value - "
           "datum.col_min) / (datum.col_max - datum.col_min)"},
          {"as", "axis_value"}}});
    chart["mark"] = {{"type", "line"}, {"point", true}};
    chart["encoding"] = {{"x", ctx.Nominal(Role::kXNominal, false)},
                        {"y", Quant("axis_value", "value (scaled per column)")},
                        {"color", ctx.Nominal(Role::kYNominal, true)},
                        {"tooltip", ctx.Tooltip()}};
  } else {
    // Templates with a nominal/value positional pair.
    const auto pair = ctx.PositionalPair();
    const json nominal = ctx.Nominal(pair.nominal, false);
    const char* group = ctx.NominalField(pair.nominal);
    const std::string v = pair.value_channel;
    const std::string v2 = v + "2";
    if (id == "bar") {
      json value{{"aggregate", "mean"}, {"field", "value"},
                 {"type", "quantitative"}, {"title", "mean of value"}};
      chart["mark"] = {{"type", "bar"}};
      chart["encoding"] = {{pair.nominal_channel, nominal}, {v, value},
                          {"tooltip", json::array(
                              {{{"field", group}, {"type", "nominal"}},
                               value})}};
    } else if (id == "stacked_bar") {
      json value = Quant("value", "value");
      value["stack"] = "zero";
      chart["mark"] = {{"type", "bar"}};
      chart["encoding"] = {{pair.nominal_channel, nominal},
                          {v, value},
                          {"color", ctx.Nominal(*ctx.Bound("color"), true)},
                          {"tooltip", ctx.Tooltip()}};
    } else if (id == "ranged_dot") {
      chart["transform"] = json::array(
          {{{"aggregate",
             json::array({{{"op", "min"}, {"field", "value"}, {"as", "min"}},
                          {{"op", "max"}, {"field", "value"}, {"as", "max"}}})},
            {"groupby", json::array({group})}}});
      chart["encoding"] = {{pair.nominal_channel, nominal}};
      chart["layer"] = json::array(
          {{{"mark", {{"type", "rule"}}},
            {"encoding", {{v, Quant("min", "value")}, {v2, {{"field", "max"}}}}}},
           {{"mark", {{"type", "point"}, {"filled", true}}},
            {"encoding", {{v, Quant("min", "value")}}}},
           {{"mark", {{"type", "point"}, {"filled", true}}},
            {"encoding", {{v, Quant("max", "value")}}}}});
    } else if (id == "box_plot") {
      json ops = json::array();
      for (const char* op : {"min", "q1", "median", "q3", "max"}) {
        ops.push_back({{"op", op}, {"field", "value"}, {"as", op}});
      }
      chart["transform"] = json::array(
          {{{"aggregate", ops}, {"groupby", json::array({group})}}});
      chart["encoding"] = {{pair.nominal_channel, nominal}};
      chart["layer"] = json::array(
          {{{"mark", {{"type", "rule"}}},
            {"encoding", {{v, Quant("min", "value")}, {v2, {{"field", "max"}}}}}},
           {{"mark", {{"type", "bar"}, {"size", 8}}},
            {"encoding", {{v, Quant("q1", "value")}, {v2, {{"field", "q3"}}}}}},
           {{"mark", {{"type", "tick"}, {"color", "white"}}},
            {"encoding", {{v, Quant("median", "value")}}}}});
    } else if (id == "strip_plot") {
      chart["mark"] = {{"type", "tick"}};
      json enc{{pair.nominal_channel, nominal},
               {v, Quant("value", "value")},
               {"tooltip", ctx.Tooltip()}};
      if (auto c = ctx.Bound("color")) enc["color"] = ctx.Nominal(*c, true);
      chart["encoding"] = std::move(enc);
    } else if (id == "multi_line" || id == "line") {
      chart["mark"] = {{"type", "line"}, {"point", true}};
      json enc{{pair.nominal_channel, nominal},
               {v, Quant("value", "value")},
               {"tooltip", ctx.Tooltip()}};
      if (auto c = ctx.Bound("color")) enc["color"] = ctx.Nominal(*c, true);
      chart["encoding"] = std::move(enc);
    } else if (id == "horizon") {
      std::vector<double> nums;
      for (const auto& val : decomp.values.data()) {
        if (val.is_number()) nums.push_back(val.number());
      }
      double lo = 0, hi = 0;
      if (!nums.empty()) {
        auto [mn, mx] = std::minmax_element(nums.begin(), nums.end());
        lo = *mn;
        hi = *mx;
      }
      const double mid = (lo + hi) / 2;
      for (auto& row : rows) {
        if (row["value"].is_null()) {
          row["band1"] = nullptr;
          row["band2"] = nullptr;
          continue;
        }
        const double x = row["value"].get<double>();
        row["band1"] = std::min(x, mid) - lo;
        row["band2"] = std::max(x - mid, 0.0);
      }
      json domain = json::array({0, mid - lo});
      auto band = [&](const char* field, const char* color, double opacity) {
        json enc = Quant(field, "value");
        enc["scale"] = {{"domain", domain}};
        return json{{"mark", {{"type", "area"},
                              {"color", color},
                              {"opacity", opacity}}},
                    {"encoding", {{v, enc}}}};
      };
      chart["encoding"] = {{pair.nominal_channel, nominal},
                          {"tooltip", ctx.Tooltip()}};
      chart["layer"] = json::array({band("band1", "#9ecae1", 0.8),
                                   band("band2", "#3182bd", 0.9)});
      meta["horizon"] = {{"bands", 2}, {"midpoint", mid}, {"min", lo},
                         {"max", hi}};
    }
  }
  chart["data"] = {{"values", std::move(rows)}};
  chart["usermeta"] = {{"_htable", std::move(meta)}};
  return {std::move(chart), geometry, unit};
}

std::vector<VisGrammarDoc> RebindAll(const TableModel& model,
                                     const VisConfig& config,
                                     const std::vector<TableUnit>& units,
                                     const CellGeometry& cells) {
  std::vector<VisGrammarDoc> out;
  if (units.empty()) return out;
  const VisTemplate& tmpl = FindTemplate(config.template_id);
  std::optional<MinMaxScale> scale;
  if (tmpl.category == TemplateCategory::kUnit) {
    std::vector<Value> values;
    for (const auto& u : units) {
      for (std::size_t r = u.block.row_start; r < u.block.row_end; ++r) {
        for (std::size_t c = u.block.col_start; c < u.block.col_end; ++c) {
          values.push_back(model.entries(r, c));
        }
      }
    }
    bool numeric = std::any_of(values.begin(), values.end(),
                               [](const Value& v) { return v.is_number(); });
    if (numeric) scale = FitScale(values);
  }
  out.reserve(units.size());
  for (const auto& u : units) {
    out.push_back(EmitSpec(model, u, config, cells, scale));
  }
  return out;
}

json ToJson(const VisGrammarDoc& doc) {
  return {{"doc", doc.doc},
          {"geometry", ToJson(doc.geometry)},
          {"unit", ToJson(doc.unit)}};
}

std::string DumpDoc(const VisGrammarDoc& doc) { return doc.doc.dump(2) + "\n"; }

}  // namespace htable
