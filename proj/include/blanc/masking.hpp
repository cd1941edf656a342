// Copyright 2026 The BLANC Toolkit Authors.
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

#include <cstdint>
#include <vector>

#include "blanc/tokenization.hpp"

namespace blanc {

// Length thresholds by token kind. A token is maskable iff its char_len is at
// least the threshold for its kind; a threshold above any word length (100 by
// convention) means that kind is never masked.
struct LengthThresholds {
  int normal = 6;
  int lead = 1;
  int follow = 1;

  friend bool operator==(const LengthThresholds&, const LengthThresholds&) = default;
};

inline constexpr int kNeverMask = 100;

// Inference-time masking: in each of `gap` passes, `gap_mask` consecutive
// positions out of every `gap` are candidates.
struct MaskingPolicy {
  int gap = 2;
  int gap_mask = 1;
  LengthThresholds min_len;

  // Throws ConfigError when gap < 1, gap_mask outside [1, gap] or a threshold < 1.
  void validate() const;
  friend bool operator==(const MaskingPolicy&, const MaskingPolicy&) = default;
};

enum class TuningMode { Even, Random };

// Masking and corruption used when tuning a model on the summary.
struct TuningPolicy {
  int gap_tune = 4;
  int gap_mask_tune = 3;
  TuningMode mode = TuningMode::Even;
  std::uint64_t seed = 0;
  double p_replace = 0.0;
  double p_keep = 0.1;
  LengthThresholds min_len;

  void validate() const;
  // Policy used for even tuning schedules.
  MaskingPolicy as_masking() const { return {gap_tune, gap_mask_tune, min_len}; }
  friend bool operator==(const TuningPolicy&, const TuningPolicy&) = default;
};

struct MaskSchedule {
  std::vector<std::vector<int>> passes;  // sorted positions per pass
  int sentence_len = 0;

  // Number of passes with at least one masked position.
  std::size_t active_passes() const;
};

bool is_eligible(const Token& token, const LengthThresholds& min_len);
inline bool is_eligible(const Token& token, const MaskingPolicy& policy) {
  return is_eligible(token, policy.min_len);
}

MaskSchedule even_schedule(const Sentence& sentence, const MaskingPolicy& policy);

// One pass per tuning copy (gap_tune copies); each eligible position is masked
// independently with probability gap_mask_tune / gap_tune. `stream` selects an
// independent random stream, e.g. the sentence index within the summary.
MaskSchedule random_schedule(const Sentence& sentence, const TuningPolicy& policy,
                             std::uint64_t stream = 0);

// Even or random, according to policy.mode.
MaskSchedule tuning_schedule(const Sentence& sentence, const TuningPolicy& policy,
                             std::uint64_t stream = 0);

enum class CorruptionAction { MaskSymbol, ReplaceRandom, KeepOriginal };

// actions[p][k] is the action for schedule.passes[p][k].
struct CorruptionPlan {
  std::vector<std::vector<CorruptionAction>> actions;
};

CorruptionPlan corruption_plan(const MaskSchedule& schedule, const TuningPolicy& policy,
                               std::uint64_t stream = 0);

}  // namespace blanc
