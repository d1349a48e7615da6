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

#ifndef HTABLE_TOOLS_SERVER_SERVICE_H_
#define HTABLE_TOOLS_SERVER_SERVICE_H_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace htable::service {

// Transport-neutral request; the HTTP front-end fills it from the wire.
struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  // Serialized as the response body; null means no body.
  nlohmann::json body;
};

struct Options {
  std::size_t max_table_cells = 1'000'000;
  // Empty disables snapshots.
  std::string snapshot_dir;
};

class Session;

// Session store and router for the JSON API. Thread-safe: requests on
// different sessions run concurrently, writes on one session are serialized
// and reads see the last committed state.
class Service {
 public:
  explicit Service(Options options = {});
  ~Service();

  Response Handle(const Request& request);

  // Writes one file per session into the snapshot directory. Returns the
  // number written; 0 when snapshots are disabled.
  std::size_t SaveSnapshots();
  // Restores sessions from the snapshot directory, skipping unreadable files.
  std::size_t LoadSnapshots();

  std::size_t session_count() const;

 private:
  std::shared_ptr<Session> Find(const std::string& id) const;
  std::shared_ptr<Session> Add(std::unique_ptr<Session> session);
  std::string NewId();

  Response CreateTable(const Request& request);
  Response Route(const Request& request, const std::vector<std::string>& parts);

  Options options_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

// Bundle export of a session: initial model, op history, current model,
// selections, stored visualization configs and their documents.
inline constexpr int kBundleVersion = 1;

}  // namespace htable::service

#endif  // HTABLE_TOOLS_SERVER_SERVICE_H_
