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

#ifndef HTABLE_ERROR_H_
#define HTABLE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace htable {

// Stable error registry. The textual names returned by CodeName() are part of
// the public wire format (service responses, CLI stderr) and must not change.
enum class ErrorCode {
  // model / locators
  kInvalidModel,
  kUnknownLabel,
  kNonContiguous,
  kAmbiguousSequence,
  kInvalidLocator,
  // importer
  kOverlapError,
  kOrphanHeading,
  kShapeError,
  kSchemaError,
  // transform
  kInvalidOp,
  kNotUniform,
  kLastLevel,
  kNonNumeric,
  kDuplicateDerived,
  kNothingToRemove,
  kDerivedPresent,
  kNotCategorical,
  kNotNumeric,
  kIrregularGroups,
  kEmptyHistory,
  // recommend
  kLevelMismatch,
  kNoRecommendation,
  // visgen
  kUnknownTemplate,
  kForbiddenBinding,
  kMissingChannel,
  kNegativeValue,
  kEmptyInput,
};

std::string_view CodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json detail = nullptr)
      : std::runtime_error(std::string(CodeName(code)) + ": " + message),
        code_(code),
        message_(message),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const nlohmann::json& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string message_;
  nlohmann::json detail_;
};

}  // namespace htable

#endif  // HTABLE_ERROR_H_
