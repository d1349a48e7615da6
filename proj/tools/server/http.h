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

#ifndef HTABLE_TOOLS_SERVER_HTTP_H_
#define HTABLE_TOOLS_SERVER_HTTP_H_

#include <httplib.h>

#include "service.h"

namespace htable::service {

// Routes every GET, POST and DELETE on `server` to `service`. The service
// must outlive the server.
void MountRoutes(httplib::Server& server, Service& service);

}  // namespace htable::service

#endif  // HTABLE_TOOLS_SERVER_HTTP_H_
