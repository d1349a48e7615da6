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

#include "http.h"

namespace htable::service {

void MountRoutes(httplib::Server& server, Service& service) {
  auto handler = [&service](const httplib::Request& req,
                            httplib::Response& res) {
    Request request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.query[k] = v;
    request.body = req.body;
    Response response = service.Handle(request);
    res.status = response.status;
    if (!response.body.is_null()) {
      res.set_content(response.body.dump(), "application/json");
    }
  };
  server.Get("/.*", handler);
  server.Post("/.*", handler);
  server.Delete("/.*", handler);
}

}  // namespace htable::service
