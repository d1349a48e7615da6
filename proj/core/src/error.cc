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

#include "htable/error.h"

namespace htable {

std::string_view CodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kNonContiguous: return "NonContiguous";
    case ErrorCode::kAmbiguousSequence: return "AmbiguousSequence";
    case ErrorCode::kInvalidLocator: return "InvalidLocator";
    case ErrorCode::kOverlapError: return "OverlapError";
    case ErrorCode::kOrphanHeading: return "OrphanHeading";
    case ErrorCode::kShapeError: return "ShapeError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInvalidOp: return "InvalidOp";
    case ErrorCode::kNotUniform: return "NotUniform";
    case ErrorCode::kLastLevel: return "LastLevel";
    case ErrorCode::kNonNumeric: return "NonNumeric";
    case ErrorCode::kDuplicateDerived: return "DuplicateDerived";
    case ErrorCode::kNothingToRemove: return "NothingToRemove";
    case ErrorCode::kDerivedPresent: return "DerivedPresent";
    case ErrorCode::kNotCategorical: return "NotCategorical";
    case ErrorCode::kNotNumeric: return "NotNumeric";
    case ErrorCode::kIrregularGroups: return "IrregularGroups";
    case ErrorCode::kEmptyHistory: return "EmptyHistory";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kNoRecommendation: return "NoRecommendation";
    case ErrorCode::kUnknownTemplate: return "UnknownTemplate";
    case ErrorCode::kForbiddenBinding: return "ForbiddenBinding";
    case ErrorCode::kMissingChannel: return "MissingChannel";
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kEmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

}  // namespace htable
