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

#include "blanc/backend.hpp"

#include <cstdio>
#include <stdexcept>

#include "blanc/random.hpp"

namespace blanc {

void MaskedInstance::validate() const {
  if (context_len < 0 || static_cast<std::size_t>(context_len) > input_ids.size())
    throw std::invalid_argument("malformed instance: context_len out of range");
  if (targets.size() != masked_positions.size())
    throw std::invalid_argument("malformed instance: targets and masked_positions differ in size");
  int prev = -1;
  for (int p : masked_positions) {
    if (p <= prev) throw std::invalid_argument("malformed instance: positions not increasing");
    if (p < context_len) throw std::invalid_argument("malformed instance: masked context position");
    if (static_cast<std::size_t>(p) >= input_ids.size())
      throw std::invalid_argument("malformed instance: position past end of input");
    prev = p;
  }
}

ScopedSession::~ScopedSession() {
  try {
    backend_->release(session_);
  } catch (...) {
    // Release failures leak a remote session but must not mask the result.
  }
}

std::string fingerprint(const TokenizedText& text) {
  std::string bytes;
  for (const auto& s : text.sentences) {
    for (const auto& t : s) bytes += std::to_string(t.vocab_id) + ' ';
    bytes += '|';
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::vector<MaskedInstance> tuning_instances(const TokenizedText& summary,
                                             const TuningPolicy& policy, const SpecialIds& ids,
                                             std::span<const VocabId> replacement_pool) {
  std::vector<MaskedInstance> out;
  Rng replace_rng(mix_seed(policy.seed, 0x7265706cULL));
  for (std::size_t s = 0; s < summary.sentences.size(); ++s) {
    const Sentence& sentence = summary.sentences[s];
    const MaskSchedule schedule = tuning_schedule(sentence, policy, s);
    const CorruptionPlan plan = corruption_plan(schedule, policy, s);
    for (std::size_t p = 0; p < schedule.passes.size(); ++p) {
      const auto& pass = schedule.passes[p];
      if (pass.empty()) continue;
      MaskedInstance inst;
      inst.input_ids.reserve(sentence.size());
      for (const auto& t : sentence) inst.input_ids.push_back(t.vocab_id);
      for (std::size_t k = 0; k < pass.size(); ++k) {
        const int pos = pass[k];
        inst.masked_positions.push_back(pos);
        inst.targets.push_back(sentence[pos].vocab_id);
        switch (plan.actions[p][k]) {
          case CorruptionAction::MaskSymbol:
            inst.input_ids[pos] = ids.mask;
            break;
          case CorruptionAction::ReplaceRandom:
            inst.input_ids[pos] = replacement_pool.empty()
                                      ? ids.mask
                                      : replacement_pool[replace_rng.below(replacement_pool.size())];
            break;
          case CorruptionAction::KeepOriginal:
            break;
        }
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<Sentence> CountingBackend::tokenize(std::span<const std::string> texts) {
  ++tokenize_calls_;
  return inner_.tokenize(texts);
}

Predictions CountingBackend::predict(std::span<const MaskedInstance> batch,
                                     const ModelSession* session) {
  ++predict_calls_;
  return inner_.predict(batch, session);
}

ModelSession CountingBackend::spawn_tuned(const TokenizedText& summary,
                                          const TuningPolicy& policy) {
  ++tune_calls_;
  return inner_.spawn_tuned(summary, policy);
}

}  // namespace blanc
