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

#include "htable/history.h"

#include <utility>

#include "htable/error.h"

namespace htable {

History::History(TableModel initial) : initial_(std::move(initial)) {}

const TableModel& History::current() const {
  return done_.empty() ? initial_ : done_.back().result;
}

const TableModel& History::Push(const TransformOp& op) {
  TableModel next = Apply(current(), op);
  done_.push_back({op, std::move(next)});
  undone_.clear();
  return current();
}

const TableModel& History::Undo() {
  if (done_.empty()) throw Error(ErrorCode::kEmptyHistory, "nothing to undo");
  undone_.push_back(std::move(done_.back()));
  done_.pop_back();
  return current();
}

const TableModel& History::Redo() {
  if (undone_.empty()) throw Error(ErrorCode::kEmptyHistory, "nothing to redo");
  done_.push_back(std::move(undone_.back()));
  undone_.pop_back();
  return current();
}

std::vector<TransformOp> History::ops() const {
  std::vector<TransformOp> out;
  out.reserve(done_.size());
  for (const auto& step : done_) out.push_back(step.op);
  return out;
}

}  // namespace htable
