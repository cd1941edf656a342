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

#include "blanc/engine.hpp"

#include <stdexcept>

#include "blanc/error.hpp"

namespace blanc {

void CountMatrix::add(bool base_ok, bool assisted_ok) {
  if (base_ok)
    ++(assisted_ok ? k11 : k10);
  else
    ++(assisted_ok ? k01 : k00);
}

double CountMatrix::score() const { return score_from_counts(k00, k01, k10, k11); }

CountMatrix& CountMatrix::operator+=(const CountMatrix& o) {
  k00 += o.k00;
  k01 += o.k01;
  k10 += o.k10;
  k11 += o.k11;
  return *this;
}

double score_from_counts(std::int64_t k00, std::int64_t k01, std::int64_t k10, std::int64_t k11) {
  if (k00 < 0 || k01 < 0 || k10 < 0 || k11 < 0) throw std::invalid_argument("negative count");
  const std::int64_t n = k00 + k01 + k10 + k11;
  if (n == 0) return 0.0;
  return static_cast<double>(k01 - k10) / static_cast<double>(n);
}

BlancResult pool_sentences(std::vector<CountMatrix> per_sentence) {
  BlancResult r;
  for (const auto& m : per_sentence) r.counts += m;
  r.score = r.counts.score();
  r.per_sentence = std::move(per_sentence);
  return r;
}

namespace {

MaskedInstance masked_sentence(const std::vector<VocabId>& context, const Sentence& sentence,
                               std::size_t length, const std::vector<int>& pass, VocabId mask_id) {
  MaskedInstance inst;
  inst.context_len = static_cast<int>(context.size());
  inst.input_ids = context;
  for (std::size_t j = 0; j < length; ++j) inst.input_ids.push_back(sentence[j].vocab_id);
  for (int pos : pass) {
    const int at = inst.context_len + pos;
    inst.masked_positions.push_back(at);
    inst.targets.push_back(inst.input_ids[at]);
    inst.input_ids[at] = mask_id;
  }
  return inst;
}

// Prefix of the sentence that fits after `context_len` input positions.
std::size_t fitted_length(const Sentence& sentence, int context_len, int max_input,
                          std::size_t sentence_index, std::vector<std::string>& warnings) {
  const auto room = static_cast<std::size_t>(max_input - context_len);
  if (sentence.size() <= room) return sentence.size();
  warnings.push_back("sentence " + std::to_string(sentence_index) + " truncated from " +
                     std::to_string(sentence.size()) + " to " + std::to_string(room) + " tokens");
  return room;
}

void tally(const MaskedInstance& inst, const std::vector<VocabId>& base,
           const std::vector<VocabId>& assisted, CountMatrix& m) {
  if (base.size() != inst.targets.size() || assisted.size() != inst.targets.size())
    throw BackendError("backend returned the wrong number of predictions");
  for (std::size_t k = 0; k < inst.targets.size(); ++k)
    m.add(base[k] == inst.targets[k], assisted[k] == inst.targets[k]);
}

Sentence prefix(const Sentence& s, std::size_t n) { return Sentence(s.begin(), s.begin() + n); }

}  // namespace

BlancResult blanc_help(const TokenizedText& text, const TokenizedText& summary,
                       const MeasureConfig& config, ModelBackend& backend) {
  if (config.family != Family::Help) throw ConfigError(config.label + ": not a help configuration");
  config.validate();
  const SpecialIds ids = backend.special_ids();

  std::vector<VocabId> assisted_context = summary.ids();
  std::vector<VocabId> base_context(assisted_context.size(), ids.filler);
  assisted_context.push_back(ids.sep);
  base_context.push_back(ids.sep);
  const int context_len = static_cast<int>(assisted_context.size());
  if (context_len >= backend.max_input_length())
    throw InputTooLongError("summary of " + std::to_string(context_len - 1) +
                            " tokens does not fit the backend input limit of " +
                            std::to_string(backend.max_input_length()));

  std::vector<std::string> warnings;
  std::vector<MaskedInstance> batch;  // assisted and base instances interleaved
  std::vector<std::size_t> owner;     // sentence of each assisted/base pair
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    const Sentence& sentence = text.sentences[s];
    const std::size_t len = fitted_length(sentence, context_len, backend.max_input_length(), s, warnings);
    const MaskSchedule schedule = even_schedule(prefix(sentence, len), config.masking);
    for (const auto& pass : schedule.passes) {
      if (pass.empty()) continue;
      batch.push_back(masked_sentence(assisted_context, sentence, len, pass, ids.mask));
      batch.push_back(masked_sentence(base_context, sentence, len, pass, ids.mask));
      owner.push_back(s);
    }
  }

  std::vector<CountMatrix> per_sentence(text.sentences.size());
  if (!batch.empty()) {
    const Predictions predictions = backend.predict(batch);
    if (predictions.size() != batch.size()) throw BackendError("backend returned the wrong batch size");
    for (std::size_t i = 0; i < owner.size(); ++i)
      tally(batch[2 * i], predictions[2 * i + 1], predictions[2 * i], per_sentence[owner[i]]);
  }
  BlancResult r = pool_sentences(std::move(per_sentence));
  r.warnings = std::move(warnings);
  return r;
}

BlancResult blanc_tune(const TokenizedText& text, const TokenizedText& summary,
                       const MeasureConfig& config, ModelBackend& backend) {
  if (config.family != Family::Tune) throw ConfigError(config.label + ": not a tune configuration");
  config.validate();
  if (!backend.capabilities().tune)
    throw CapabilityError("backend " + backend.identity() + " cannot tune");
  const SpecialIds ids = backend.special_ids();

  std::vector<std::string> warnings;
  std::vector<MaskedInstance> batch;
  std::vector<std::size_t> owner;
  const std::vector<VocabId> no_context;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    const Sentence& sentence = text.sentences[s];
    const std::size_t len = fitted_length(sentence, 0, backend.max_input_length(), s, warnings);
    const MaskSchedule schedule = even_schedule(prefix(sentence, len), config.masking);
    for (const auto& pass : schedule.passes) {
      if (pass.empty()) continue;
      batch.push_back(masked_sentence(no_context, sentence, len, pass, ids.mask));
      owner.push_back(s);
    }
  }

  std::vector<CountMatrix> per_sentence(text.sentences.size());
  if (!batch.empty()) {
    ScopedSession session(backend, backend.spawn_tuned(summary, *config.tuning));
    const Predictions assisted = backend.predict(batch, &session.get());
    const Predictions base = backend.predict(batch);
    if (assisted.size() != batch.size() || base.size() != batch.size())
      throw BackendError("backend returned the wrong batch size");
    for (std::size_t i = 0; i < batch.size(); ++i) tally(batch[i], base[i], assisted[i], per_sentence[owner[i]]);
  }
  BlancResult r = pool_sentences(std::move(per_sentence));
  r.warnings = std::move(warnings);
  return r;
}

BlancResult evaluate(const TokenizedText& text, const TokenizedText& summary,
                     const MeasureConfig& config, ModelBackend& backend) {
  return config.family == Family::Help ? blanc_help(text, summary, config, backend)
                                       : blanc_tune(text, summary, config, backend);
}

}  // namespace blanc
