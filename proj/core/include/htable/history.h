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

#ifndef HTABLE_HISTORY_H_
#define HTABLE_HISTORY_H_

#include <cstddef>
#include <vector>

#include "htable/model.h"
#include "htable/ops.h"

namespace htable {

// Undo/redo stack over applied transformations. Each entry keeps the op and
// the model it produced, so undo and redo are O(1) and the op list can be
// replayed from the initial model.
class History {
 public:
  explicit History(TableModel initial);

  const TableModel& initial() const { return initial_; }
  const TableModel& current() const;

  // Applies `op` to the current model; clears the redo stack. On failure the
  // history is unchanged and the error propagates.
  const TableModel& Push(const TransformOp& op);

  // Throws kEmptyHistory when there is nothing to undo (redo).
  const TableModel& Undo();
  const TableModel& Redo();

  bool can_undo() const { return !done_.empty(); }
  bool can_redo() const { return !undone_.empty(); }
  std::size_t size() const { return done_.size(); }

  // Ops leading from initial() to current(), in order.
  std::vector<TransformOp> ops() const;

 private:
  struct Step {
    TransformOp op;
    TableModel result;
  };

  TableModel initial_;
  std::vector<Step> done_;
  std::vector<Step> undone_;
};

}  // namespace htable

#endif  // HTABLE_HISTORY_H_
