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

#ifndef HTABLE_SRC_JSON_UTIL_H_
#define HTABLE_SRC_JSON_UTIL_H_

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "htable/error.h"

namespace htable::internal {

using nlohmann::json;

[[noreturn]] inline void SchemaFail(const std::string& pointer,
                                    const std::string& what) {
  throw Error(ErrorCode::kSchemaError, pointer + ": " + what,
              {{"pointer", pointer}});
}

inline std::string Child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return pointer + "/" + escaped;
}

inline std::string Child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

inline const json& Field(const json& obj, const std::string& key,
                         const std::string& pointer) {
  if (!obj.is_object()) SchemaFail(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) SchemaFail(Child(pointer, key), "required field missing");
  return *it;
}

inline std::size_t Count(const json& v, const std::string& pointer) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    SchemaFail(pointer, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline const std::string& String(const json& v, const std::string& pointer) {
  if (!v.is_string()) SchemaFail(pointer, "expected a string");
  return v.get_ref<const std::string&>();
}

inline const json& Array(const json& v, const std::string& pointer) {
  if (!v.is_array()) SchemaFail(pointer, "expected an array");
  return v;
}

}  // namespace htable::internal

#endif  // HTABLE_SRC_JSON_UTIL_H_
