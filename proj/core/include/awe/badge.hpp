// Copyright 2026 The AWE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "awe/types.hpp"

namespace awe {

// Badge truth table:
//   directly  related  grounded   badge
//   true      true     true       Green
//   false     true     true       Yellow
//   any other combination         Red
// Depends only on the three booleans, never on the assessment text.
constexpr Badge assign_badge(bool directly, bool related, bool grounded) noexcept {
  if (related && grounded) return directly ? Badge::Green : Badge::Yellow;
  return Badge::Red;
}

inline Badge assign_badge(const CriteriaVerdict& v) noexcept {
  return assign_badge(v.context_answers_question_directly, v.context_addresses_question,
                      v.answer_grounded_in_context);
}

// The stored badge. Records whose judge failed always read as Red.
inline Badge badge_of_record(const EvaluationRecord& record) noexcept {
  return record.judge_meta.judge_failed ? Badge::Red : record.badge;
}

// True when the record satisfies the badge/verdict invariant.
inline bool badge_consistent(const EvaluationRecord& record) noexcept {
  if (record.judge_meta.attempts < 1) return false;
  if (record.judge_meta.judge_failed) return record.badge == Badge::Red;
  return record.badge == assign_badge(record.verdict);
}

}  // namespace awe
