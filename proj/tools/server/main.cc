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

#include <chrono>
#include <condition_variable>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "http.h"
#include "service.h"

namespace {

httplib::Server* g_server = nullptr;

void OnSignal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"htable HTTP service"};
  std::string host = "127.0.0.1";
  int port = 8080;
  if (const char* env = std::getenv("HTABLE_PORT")) port = std::atoi(env);
  htable::service::Options options;
  int snapshot_seconds = 30;
  app.add_option("--host", host, "Address to bind");
  app.add_option("--port", port, "Port to listen on (env HTABLE_PORT)");
  app.add_option("--snapshot-dir", options.snapshot_dir,
                 "Directory for periodic session snapshots");
  app.add_option("--snapshot-interval", snapshot_seconds,
                 "Seconds between snapshots")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-table-cells", options.max_table_cells,
                 "Largest accepted table, in entry cells");
  CLI11_PARSE(app, argc, argv);

  htable::service::Service service(options);
  if (std::size_t n = service.LoadSnapshots()) {
    std::cerr << "restored " << n << " sessions\n";
  }

  httplib::Server server;
  server.set_payload_max_length(256u << 20);
  htable::service::MountRoutes(server, service);

  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::thread snapshots;
  if (!options.snapshot_dir.empty()) {
    snapshots = std::thread([&] {
      std::unique_lock<std::mutex> lock(mu);
      while (!cv.wait_for(lock, std::chrono::seconds(snapshot_seconds),
                          [&] { return done; })) {
        service.SaveSnapshots();
      }
    });
  }

  g_server = &server;
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  std::cerr << "listening on " << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);

  {
    std::lock_guard<std::mutex> lock(mu);
    done = true;
  }
  cv.notify_all();
  if (snapshots.joinable()) snapshots.join();
  service.SaveSnapshots();
  return ok ? 0 : 1;
}
