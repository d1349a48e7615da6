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

#include <string>

#include "htable/error.h"
#include "htable/ops.h"
#include "htable/transform.h"

namespace htable {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidOp, what);
}

const json& Need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) Bad(std::string("missing field '") + key + "'");
  return *it;
}

// First present key among `keys`.
const json& NeedAny(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = j.find(k);
    if (it != j.end()) return *it;
  }
  Bad(std::string("missing field '") + *keys.begin() + "'");
}

int Level(const json& v) {
  if (!v.is_number_integer()) Bad("level must be an integer");
  return v.get<int>();
}

std::size_t Leaf(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    Bad(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

AxisKind Axis(const json& v) {
  auto axis = v.is_string() ? ParseAxis(v.get<std::string>()) : std::nullopt;
  if (!axis) Bad("axis must be \"row\" or \"col\"");
  return *axis;
}

}  // namespace

TableModel Apply(const TableModel& model, const TransformOp& op) {
  return std::visit(
      Overloaded{
          [&](const SwapOp& o) { return Swap(model, o.axis, o.upper_level); },
          [&](const TransposeLevelOp& o) {
            return TransposeLevel(model, o.source_axis, o.level);
          },
          [&](const TransposeTableOp&) { return TransposeTable(model); },
          [&](const ToLinearOp& o) {
            return ToLinear(model, o.axis, o.level, o.stat);
          },
          [&](const ToStackedOp& o) {
            return ToStacked(model, o.axis, o.level);
          },
          [&](const FoldOp& o) { return Fold(model, o.level); },
          [&](const UnfoldOp& o) {
            return Unfold(model, o.key_col_leaf, o.value_col_leaf, o.level);
          },
      },
      op);
}

std::string OpName(const TransformOp& op) {
  static const char* kNames[] = {"swap",      "transpose_level",
                                 "transpose_table", "to_linear",
                                 "to_stacked", "fold", "unfold"};
  return kNames[op.index()];
}

json ToJson(const TransformOp& op) {
  json j = std::visit(
      Overloaded{
          [](const SwapOp& o) {
            return json{{"axis", AxisName(o.axis)},
                        {"upper_level", o.upper_level}};
          },
          [](const TransposeLevelOp& o) {
            return json{{"source_axis", AxisName(o.source_axis)},
                        {"level", o.level}};
          },
          [](const TransposeTableOp&) { return json::object(); },
          [](const ToLinearOp& o) {
            return json{{"axis", AxisName(o.axis)},
                        {"level", o.level},
                        {"stat", StatName(o.stat)}};
          },
          [](const ToStackedOp& o) {
            return json{{"axis", AxisName(o.axis)}, {"level", o.level}};
          },
          [](const FoldOp& o) { return json{{"level", o.level}}; },
          [](const UnfoldOp& o) {
            json u{{"key_col_leaf", o.key_col_leaf},
                   {"value_col_leaf", o.value_col_leaf}};
            if (o.level) u["level"] = *o.level;
            return u;
          },
      },
      op);
  j["op"] = OpName(op);
  return j;
}

TransformOp OpFromJson(const json& j) {
  if (!j.is_object()) Bad("an op must be a JSON object");
  const json& tag = Need(j, "op");
  if (!tag.is_string()) Bad("\"op\" must be a string");
  const std::string name = tag.get<std::string>();
  if (name == "swap") {
    return SwapOp{Axis(Need(j, "axis")),
                  Level(NeedAny(j, {"upper_level", "level"}))};
  }
  if (name == "transpose_level") {
    return TransposeLevelOp{Axis(NeedAny(j, {"source_axis", "axis"})),
                            Level(Need(j, "level"))};
  }
  if (name == "transpose_table") return TransposeTableOp{};
  if (name == "to_linear") {
    Stat stat = Stat::kSum;
    if (j.contains("stat")) {
      auto s = j["stat"].is_string() ? ParseStat(j["stat"].get<std::string>())
                                     : std::nullopt;
      if (!s) Bad("stat must be one of sum, avg, min, max");
      stat = *s;
    }
    return ToLinearOp{Axis(Need(j, "axis")), Level(Need(j, "level")), stat};
  }
  if (name == "to_stacked") {
    return ToStackedOp{Axis(Need(j, "axis")), Level(Need(j, "level"))};
  }
  if (name == "fold") return FoldOp{Level(Need(j, "level"))};
  if (name == "unfold") {
    UnfoldOp op{Leaf(Need(j, "key_col_leaf"), "key_col_leaf"),
                Leaf(Need(j, "value_col_leaf"), "value_col_leaf"),
                std::nullopt};
    if (j.contains("level") && !j["level"].is_null()) {
      op.level = Level(j["level"]);
    }
    return op;
  }
  Bad("unknown op '" + name + "'");
}

std::vector<TransformOp> ScriptFromJson(const json& j) {
  const json& list = j.is_object() && j.contains("ops") ? j["ops"] : j;
  if (!list.is_array()) Bad("a script must be an array of ops");
  std::vector<TransformOp> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      out.push_back(OpFromJson(list[i]));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidOp,
                  "op " + std::to_string(i) + ": " + e.message(),
                  {{"index", i}});
    }
  }
  return out;
}

json ToJson(const std::vector<TransformOp>& ops) {
  json out = json::array();
  for (const auto& op : ops) out.push_back(ToJson(op));
  return out;
}

ScriptResult ApplyScript(const TableModel& model,
                         const std::vector<TransformOp>& ops) {
  ScriptResult result{model, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      result.model = Apply(result.model, ops[i]);
    } catch (const Error& e) {
      result.failed_index = i;
      result.error = e;
      return result;
    }
  }
  return result;
}

}  // namespace htable
