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

#include "blanc/masking.hpp"

#include <string>

#include "blanc/error.hpp"
#include "blanc/random.hpp"

namespace blanc {

namespace {

void validate_thresholds(const LengthThresholds& t) {
  if (t.normal < 1 || t.lead < 1 || t.follow < 1)
    throw ConfigError("length thresholds must be >= 1");
}

}  // namespace

void MaskingPolicy::validate() const {
  if (gap < 1) throw ConfigError("gap must be >= 1, got " + std::to_string(gap));
  if (gap_mask < 1 || gap_mask > gap)
    throw ConfigError("gap_mask must be in [1, gap], got " + std::to_string(gap_mask));
  validate_thresholds(min_len);
}

void TuningPolicy::validate() const {
  if (gap_tune < 1) throw ConfigError("gap_tune must be >= 1");
  if (gap_mask_tune < 1 || gap_mask_tune > gap_tune)
    throw ConfigError("gap_mask_tune must be in [1, gap_tune]");
  if (!(p_replace >= 0.0 && p_replace <= 1.0)) throw ConfigError("p_replace must be in [0, 1]");
  if (!(p_keep >= 0.0 && p_keep <= 1.0)) throw ConfigError("p_keep must be in [0, 1]");
  if (p_replace + p_keep > 1.0 + 1e-12) throw ConfigError("p_replace + p_keep must be <= 1");
  validate_thresholds(min_len);
}

std::size_t MaskSchedule::active_passes() const {
  std::size_t n = 0;
  for (const auto& p : passes)
    if (!p.empty()) ++n;
  return n;
}

bool is_eligible(const Token& token, const LengthThresholds& min_len) {
  switch (token.kind) {
    case TokenKind::Normal:
      return token.char_len >= min_len.normal;
    case TokenKind::Lead:
      return token.char_len >= min_len.lead;
    case TokenKind::Follow:
      return token.char_len >= min_len.follow;
  }
  return false;
}

MaskSchedule even_schedule(const Sentence& sentence, const MaskingPolicy& policy) {
  policy.validate();
  MaskSchedule schedule;
  schedule.sentence_len = static_cast<int>(sentence.size());
  schedule.passes.resize(policy.gap);
  for (int offset = 0; offset < policy.gap; ++offset) {
    auto& pass = schedule.passes[offset];
    for (int j = 0; j < schedule.sentence_len; ++j) {
      // ((j - offset) mod gap), kept non-negative
      const int phase = ((j - offset) % policy.gap + policy.gap) % policy.gap;
      if (phase < policy.gap_mask && is_eligible(sentence[j], policy)) pass.push_back(j);
    }
  }
  return schedule;
}

MaskSchedule random_schedule(const Sentence& sentence, const TuningPolicy& policy,
                             std::uint64_t stream) {
  policy.validate();
  Rng rng(mix_seed(policy.seed, 2 * stream));
  const double p = static_cast<double>(policy.gap_mask_tune) / policy.gap_tune;
  MaskSchedule schedule;
  schedule.sentence_len = static_cast<int>(sentence.size());
  schedule.passes.resize(policy.gap_tune);
  for (auto& pass : schedule.passes) {
    for (int j = 0; j < schedule.sentence_len; ++j) {
      if (!is_eligible(sentence[j], policy.min_len)) continue;
      // Always draw so the stream does not depend on p == 1.
      if (rng.uniform() < p) pass.push_back(j);
    }
  }
  return schedule;
}

MaskSchedule tuning_schedule(const Sentence& sentence, const TuningPolicy& policy,
                             std::uint64_t stream) {
  if (policy.mode == TuningMode::Even) return even_schedule(sentence, policy.as_masking());
  return random_schedule(sentence, policy, stream);
}

CorruptionPlan corruption_plan(const MaskSchedule& schedule, const TuningPolicy& policy,
                               std::uint64_t stream) {
  policy.validate();
  Rng rng(mix_seed(policy.seed, 2 * stream + 1));
  CorruptionPlan plan;
  plan.actions.reserve(schedule.passes.size());
  for (const auto& pass : schedule.passes) {
    auto& actions = plan.actions.emplace_back();
    actions.reserve(pass.size());
    for (std::size_t k = 0; k < pass.size(); ++k) {
      const double u = rng.uniform();
      if (u < policy.p_keep)
        actions.push_back(CorruptionAction::KeepOriginal);
      else if (u < policy.p_keep + policy.p_replace)
        actions.push_back(CorruptionAction::ReplaceRandom);
      else
        actions.push_back(CorruptionAction::MaskSymbol);
    }
  }
  return plan;
}

}  // namespace blanc
