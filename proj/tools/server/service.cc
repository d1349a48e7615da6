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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include "htable/error.h"
#include "htable/history.h"
#include "htable/htj.h"
#include "htable/locator.h"
#include "htable/ops.h"
#include "htable/recommend.h"
#include "htable/templates.h"
#include "htable/visgen.h"

namespace htable::service {

using nlohmann::json;

namespace {

struct StoredVis {
  VisConfig config;
  std::string apply_to;
  int model_version = 0;
  std::vector<TableUnit> units;
  json docs = json::array();
};

// Service-level failures that do not come from the core error registry.
struct ApiError {
  int status;
  std::string code;
  std::string message;
  json detail = nullptr;
};

Response ErrorBody(int status, std::string_view code, const std::string& msg,
                   const json& detail = nullptr) {
  json body{{"error", {{"code", code}, {"message", msg}}}};
  if (!detail.is_null()) body["error"]["detail"] = detail;
  return {status, std::move(body)};
}

// Locator problems are the caller's fault regardless of endpoint.
int StatusFor(ErrorCode code, int fallback) {
  switch (code) {
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kNonContiguous:
    case ErrorCode::kAmbiguousSequence:
    case ErrorCode::kInvalidLocator:
      return 400;
    default:
      return fallback;
  }
}

json ParseBody(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) {
    throw ApiError{400, "BadRequest", "request body is not valid JSON"};
  }
  return j;
}

std::vector<std::string> SplitPath(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : path) {
    if (ch == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

int IntParam(const std::map<std::string, std::string>& query,
             const std::string& key, int fallback) {
  auto it = query.find(key);
  if (it == query.end() || it->second.empty()) return fallback;
  int v = 0;
  const std::string& s = it->second;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ApiError{400, "BadRequest", key + " must be an integer"};
  }
  return v;
}

Mechanism MechanismParam(const std::string& name) {
  auto m = ParseMechanism(name);
  if (!m) {
    throw ApiError{400, "BadRequest",
                   "mechanism must be \"topology\" or \"name\""};
  }
  return *m;
}

// Reads {"row": [lo, hi], "col": [lo, hi]}; missing bounds are unbounded.
std::pair<PriorityRange, PriorityRange> RangesFromJson(const json& j) {
  PriorityRange rows, cols;
  if (j.is_null()) return {rows, cols};
  if (!j.is_object()) {
    throw ApiError{400, "BadRequest", "ranges must be an object"};
  }
  auto read = [&](const char* key, PriorityRange& r) {
    if (!j.contains(key)) return;
    const json& v = j[key];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer()) {
      throw ApiError{400, "BadRequest",
                     std::string("ranges.") + key + " must be [lo, hi]"};
    }
    r.lo = v[0].get<int>();
    r.hi = v[1].get<int>();
  };
  read("row", rows);
  read("col", cols);
  return {rows, cols};
}

TableUnit StoredUnit(const json& j) {
  TableUnit u;
  u.block = BlockFromJson(j.at("block"));
  u.row_locator = LocatorFromJson(j.at("row_locator"));
  u.col_locator = LocatorFromJson(j.at("col_locator"));
  u.row_single_subtree = j.value("row_single_subtree", false);
  u.col_single_subtree = j.value("col_single_subtree", false);
  return u;
}

}  // namespace

class Session {
 public:
  struct State {
    std::shared_ptr<const TableModel> initial;
    std::shared_ptr<const TableModel> model;
    std::vector<TransformOp> ops;
    bool can_undo = false;
    bool can_redo = false;
    std::map<std::string, TableUnit> selections;
    std::map<std::string, std::shared_ptr<const StoredVis>> vis;
  };

  Session(std::string id, TableModel initial)
      : id_(std::move(id)), history_(std::move(initial)) {
    state_.initial = std::make_shared<const TableModel>(history_.initial());
    Publish();
  }

  const std::string& id() const { return id_; }

  State Snapshot() const {
    std::lock_guard<std::mutex> lock(state_mu_);
    return state_;
  }

  // Runs `fn` with exclusive write access, then publishes the new state.
  template <class Fn>
  auto Write(Fn&& fn) {
    std::lock_guard<std::mutex> lock(write_mu_);
    struct Publisher {
      Session* s;
      ~Publisher() { s->Publish(); }
    } publisher{this};
    return fn(history_, selections_, vis_);
  }

 private:
  void Publish() {
    auto model = std::make_shared<const TableModel>(history_.current());
    std::lock_guard<std::mutex> lock(state_mu_);
    state_.model = std::move(model);
    state_.ops = history_.ops();
    state_.can_undo = history_.can_undo();
    state_.can_redo = history_.can_redo();
    state_.selections = selections_;
    state_.vis = vis_;
  }

  const std::string id_;
  std::mutex write_mu_;
  History history_;
  std::map<std::string, TableUnit> selections_;
  std::map<std::string, std::shared_ptr<const StoredVis>> vis_;

  mutable std::mutex state_mu_;
  State state_;
};

namespace {

using VisMap = std::map<std::string, std::shared_ptr<const StoredVis>>;
using SelectionMap = std::map<std::string, TableUnit>;

json SessionBody(const std::string& id, const Session::State& s) {
  return {{"session_id", id},
          {"version", s.model->version},
          {"can_undo", s.can_undo},
          {"can_redo", s.can_redo},
          {"summary", ModelSummary(*s.model)}};
}

json BundleOf(const Session::State& s) {
  json selections = json::object();
  for (const auto& [name, unit] : s.selections) selections[name] = ToJson(unit);
  json configs = json::object();
  json docs = json::object();
  for (const auto& [name, v] : s.vis) {
    json units = json::array();
    for (const auto& u : v->units) units.push_back(ToJson(u));
    configs[name] = {{"config", ToJson(v->config)},
                     {"apply_to", v->apply_to},
                     {"model_version", v->model_version},
                     {"units", std::move(units)}};
    docs[name] = v->docs;
  }
  return {{"bundle_version", kBundleVersion},
          {"initial", SerializeHtj(*s.initial)},
          {"ops", ToJson(s.ops)},
          {"model", SerializeHtj(*s.model)},
          {"version", s.model->version},
          {"selections", std::move(selections)},
          {"configs", std::move(configs)},
          {"docs", std::move(docs)}};
}

bool IsBundle(const json& j) {
  return j.is_object() && j.contains("bundle_version");
}

void CheckCells(const TableModel& m, std::size_t limit) {
  const std::size_t cells = m.entries.rows() * m.entries.cols();
  if (cells > limit) {
    throw ApiError{413, "TableTooLarge",
                   "table has " + std::to_string(cells) +
                       " cells; the limit is " + std::to_string(limit),
                   {{"cells", cells}, {"limit", limit}}};
  }
}

// Rebuilds a session from a bundle, replaying its ops.
std::unique_ptr<Session> SessionFromBundle(std::string id, const json& b) {
  if (b.value("bundle_version", 0) != kBundleVersion) {
    throw Error(ErrorCode::kSchemaError, "unsupported bundle_version");
  }
  if (!b.contains("initial") || !b.contains("ops")) {
    throw Error(ErrorCode::kSchemaError,
                "a bundle needs \"initial\" and \"ops\"");
  }
  auto session = std::make_unique<Session>(std::move(id), ParseHtj(b["initial"]));
  session->Write([&](History& h, SelectionMap& sel, VisMap& vis) {
    for (const auto& op : ScriptFromJson(b["ops"])) h.Push(op);
    if (b.contains("model") && !Equivalent(h.current(), ParseHtj(b["model"]))) {
      throw Error(ErrorCode::kSchemaError,
                  "bundle model does not match its replayed history");
    }
    try {
      for (const auto& [name, u] : b.value("selections", json::object()).items()) {
        sel[name] = StoredUnit(u);
      }
      const json configs = b.value("configs", json::object());
      const json docs = b.value("docs", json::object());
      for (const auto& [name, c] : configs.items()) {
        auto v = std::make_shared<StoredVis>();
        v->config = VisConfigFromJson(c.at("config"));
        v->apply_to = c.value("apply_to", "selection");
        v->model_version = c.value("model_version", 0);
        for (const auto& u : c.value("units", json::array())) {
          v->units.push_back(StoredUnit(u));
        }
        if (docs.contains(name)) v->docs = docs[name];
        vis[name] = std::move(v);
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kSchemaError,
                  std::string("malformed bundle: ") + e.what());
    }
    return 0;
  });
  return session;
}

}  // namespace

Service::Service(Options options) : options_(std::move(options)) {}
Service::~Service() = default;

std::size_t Service::session_count() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

std::shared_ptr<Session> Service::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ApiError{404, "NotFound", "no session '" + id + "'"};
  }
  return it->second;
}

std::shared_ptr<Session> Service::Add(std::unique_ptr<Session> session) {
  std::shared_ptr<Session> s = std::move(session);
  std::unique_lock lock(mu_);
  sessions_[s->id()] = s;
  return s;
}

std::string Service::NewId() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uint64_t n;
  {
    std::unique_lock lock(mu_);
    n = ++counter_;
  }
  std::ostringstream out;
  out << std::hex << (rng() & 0xffffffffffULL) << "-" << n;
  return out.str();
}

Response Service::Handle(const Request& request) {
  try {
    auto parts = SplitPath(request.path);
    if (parts.size() == 1 && parts[0] == "health") {
      return {200, {{"status", "ok"}, {"sessions", session_count()}}};
    }
    if (parts.size() == 1 && parts[0] == "templates") {
      if (request.method != "GET") {
        return ErrorBody(405, "MethodNotAllowed", "use GET");
      }
      return {200, CatalogJson()};
    }
    if (parts.size() == 1 && parts[0] == "tables") {
      if (request.method != "POST") {
        return ErrorBody(405, "MethodNotAllowed", "use POST");
      }
      return CreateTable(request);
    }
    if (parts.size() >= 2 && parts[0] == "tables") {
      return Route(request, parts);
    }
    return ErrorBody(404, "NotFound", "no route for " + request.path);
  } catch (const ApiError& e) {
    return ErrorBody(e.status, e.code, e.message, e.detail);
  } catch (const Error& e) {
    return ErrorBody(StatusFor(e.code(), 422), CodeName(e.code()), e.message(),
                     e.detail());
  } catch (const std::exception& e) {
    return ErrorBody(500, "Internal", e.what());
  }
}

Response Service::CreateTable(const Request& request) {
  json body = ParseBody(request.body);
  std::unique_ptr<Session> session;
  try {
    if (IsBundle(body)) {
      session = SessionFromBundle(NewId(), body);
    } else {
      if (body.is_object() && body.contains("cells") &&
          body.value("width", 0ULL) * body.value("height", 0ULL) >
              options_.max_table_cells) {
        throw ApiError{413, "TableTooLarge", "grid exceeds the cell limit"};
      }
      session = std::make_unique<Session>(NewId(), ModelFromJson(body));
    }
  } catch (const Error& e) {
    return ErrorBody(400, CodeName(e.code()), e.message(), e.detail());
  } catch (const json::exception& e) {
    return ErrorBody(400, CodeName(ErrorCode::kSchemaError), e.what());
  }
  auto state = session->Snapshot();
  CheckCells(*state.model, options_.max_table_cells);
  auto s = Add(std::move(session));
  return {201, SessionBody(s->id(), state)};
}

Response Service::Route(const Request& request,
                        const std::vector<std::string>& parts) {
  const std::string& method = request.method;
  auto session = Find(parts[1]);
  const std::string action = parts.size() > 2 ? parts[2] : "";
  if (parts.size() > 3) {
    return ErrorBody(404, "NotFound", "no route for " + request.path);
  }
  auto require = [&](const char* m) {
    if (method != m) {
      throw ApiError{405, "MethodNotAllowed", std::string("use ") + m};
    }
  };

  if (action.empty()) {
    if (method == "DELETE") {
      std::unique_lock lock(mu_);
      sessions_.erase(session->id());
      return {204, nullptr};
    }
    require("GET");
    auto state = session->Snapshot();
    json body = SessionBody(session->id(), state);
    body["model"] = SerializeHtj(*state.model);
    return {200, std::move(body)};
  }

  if (action == "transform") {
    require("POST");
    json body = ParseBody(request.body);
    TransformOp op = OpFromJson(body);
    session->Write([&](History& h, SelectionMap&, VisMap&) {
      const TableModel& next = h.Push(op);
      try {
        CheckCells(next, options_.max_table_cells);
      } catch (const ApiError&) {
        h.Undo();
        throw;
      }
      return h.current().version;
    });
    json out = SessionBody(session->id(), session->Snapshot());
    out["op"] = ToJson(op);
    return {200, std::move(out)};
  }

  if (action == "undo" || action == "redo") {
    require("POST");
    session->Write([&](History& h, SelectionMap&, VisMap&) {
      return (action == "undo" ? h.Undo() : h.Redo()).version;
    });
    return {200, SessionBody(session->id(), session->Snapshot())};
  }

  if (action == "history") {
    require("GET");
    auto state = session->Snapshot();
    return {200,
            {{"session_id", session->id()},
             {"version", state.model->version},
             {"ops", ToJson(state.ops)},
             {"can_undo", state.can_undo},
             {"can_redo", state.can_redo}}};
  }

  if (action == "selections") {
    if (method == "GET") {
      json out = json::object();
      for (const auto& [name, u] : session->Snapshot().selections) {
        out[name] = ToJson(u);
      }
      return {200, std::move(out)};
    }
    require("POST");
    json body = ParseBody(request.body);
    if (!body.contains("name") || !body["name"].is_string()) {
      throw ApiError{400, "BadRequest", "a selection needs a string name"};
    }
    const std::string name = body["name"].get<std::string>();
    TableUnit unit = session->Write([&](History& h, SelectionMap& sel, VisMap&) {
      TableUnit u = UnitFromJson(h.current(), body);
      sel[name] = u;
      return u;
    });
    return {201, {{"name", name}, {"unit", ToJson(unit)}}};
  }

  if (action == "recommend") {
    require("GET");
    auto state = session->Snapshot();
    const TableModel& model = *state.model;
    TableUnit unit;
    auto q = request.query;
    if (q.count("selection")) {
      auto it = state.selections.find(q["selection"]);
      if (it == state.selections.end()) {
        throw ApiError{404, "NotFound",
                       "no selection '" + q["selection"] + "'"};
      }
      unit = it->second;
    } else {
      if (!q.count("row") || !q.count("col")) {
        throw ApiError{400, "BadRequest",
                       "pass row and col locators or a selection name"};
      }
      json row = json::parse(q["row"], nullptr, false);
      json col = json::parse(q["col"], nullptr, false);
      if (row.is_discarded() || col.is_discarded()) {
        throw Error(ErrorCode::kInvalidLocator,
                    "row and col must be JSON-encoded locators");
      }
      unit = UnitFromJson(model, {{"row", row}, {"col", col}});
    }
    const Mechanism mech =
        MechanismParam(q.count("mechanism") ? q["mechanism"] : "topology");
    PriorityRange rows{IntParam(q, "row_lo", 0),
                       IntParam(q, "row_hi", PriorityRange{}.hi)};
    PriorityRange cols{IntParam(q, "col_lo", 0),
                       IntParam(q, "col_hi", PriorityRange{}.hi)};
    json recs = json::array();
    for (const auto& r : Recommend(model, unit, mech, rows, cols)) {
      recs.push_back(ToJson(r));
    }
    return {200,
            {{"reference", ToJson(unit)},
             {"mechanism", MechanismName(mech)},
             {"version", model.version},
             {"count", recs.size()},
             {"recommendations", std::move(recs)}}};
  }

  if (action == "visualize") {
    require("POST");
    json body = ParseBody(request.body);
    if (!body.contains("config")) {
      throw ApiError{400, "BadRequest", "visualize needs a config"};
    }
    const std::string apply_to = body.value("apply_to", "selection");
    if (apply_to != "selection" && apply_to != "recommended") {
      throw ApiError{400, "BadRequest",
                     "apply_to must be \"selection\" or \"recommended\""};
    }
    const std::string mech_name = body.value("mechanism", "topology");
    auto ranges = RangesFromJson(body.value("ranges", json()));
    json out = session->Write([&](History& h, SelectionMap& sel, VisMap& vis) {
      const TableModel& model = h.current();
      TableUnit unit;
      if (body.contains("selection")) {
        auto it = sel.find(body["selection"].get<std::string>());
        if (it == sel.end()) {
          throw ApiError{404, "NotFound", "unknown selection"};
        }
        unit = it->second;
      } else if (body.contains("unit")) {
        unit = UnitFromJson(model, body["unit"]);
      } else {
        throw ApiError{400, "BadRequest", "pass a unit or a selection name"};
      }
      auto v = std::make_shared<StoredVis>();
      v->config = VisConfigFromJson(body["config"]);
      v->apply_to = apply_to;
      v->model_version = model.version;
      if (apply_to == "recommended") {
        for (auto& r : Recommend(model, unit, MechanismParam(mech_name),
                                 ranges.first, ranges.second)) {
          v->units.push_back(std::move(r.unit));
        }
      } else {
        v->units.push_back(unit);
      }
      for (const auto& d : RebindAll(model, v->config, v->units)) {
        v->docs.push_back(ToJson(d));
      }
      std::string name = body.value("name", "");
      if (name.empty()) name = "vis-" + std::to_string(vis.size() + 1);
      json result{{"name", name},
                  {"apply_to", apply_to},
                  {"version", model.version},
                  {"count", v->docs.size()},
                  {"docs", v->docs}};
      vis[name] = std::move(v);
      return result;
    });
    return {200, std::move(out)};
  }

  if (action == "export") {
    require("GET");
    auto it = request.query.find("format");
    const std::string format = it == request.query.end() ? "htj" : it->second;
    auto state = session->Snapshot();
#ifndef NDEBUG
    if (!Equivalent(ApplyScript(*state.initial, state.ops).model,
                    *state.model)) {
      return ErrorBody(500, "Internal", "history replay diverged");
    }
#endif
    if (format == "htj") return {200, SerializeHtj(*state.model)};
    if (format == "bundle") return {200, BundleOf(state)};
    throw ApiError{400, "BadRequest", "format must be htj or bundle"};
  }

  return ErrorBody(404, "NotFound", "no route for " + request.path);
}

std::size_t Service::SaveSnapshots() {
  if (options_.snapshot_dir.empty()) return 0;
  namespace fs = std::filesystem;
  fs::create_directories(options_.snapshot_dir);
  std::vector<std::shared_ptr<Session>> all;
  {
    std::shared_lock lock(mu_);
    for (const auto& [_, s] : sessions_) all.push_back(s);
  }
  std::size_t n = 0;
  for (const auto& s : all) {
    json doc{{"session_id", s->id()}, {"bundle", BundleOf(s->Snapshot())}};
    const fs::path final_path = fs::path(options_.snapshot_dir) / (s->id() + ".json");
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << doc.dump();
      if (!out) continue;
    }
    fs::rename(tmp, final_path);
    ++n;
  }
  return n;
}

std::size_t Service::LoadSnapshots() {
  if (options_.snapshot_dir.empty()) return 0;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(options_.snapshot_dir, ec)) return 0;
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(options_.snapshot_dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("session_id") ||
        !doc.contains("bundle")) {
      continue;
    }
    try {
      Add(SessionFromBundle(doc["session_id"].get<std::string>(),
                            doc["bundle"]));
      ++n;
    } catch (const std::exception&) {
      continue;
    }
  }
  return n;
}

}  // namespace htable::service
