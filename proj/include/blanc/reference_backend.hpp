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

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "blanc/backend.hpp"

namespace blanc {

// Token frequency table. Ordered so that argmax ties resolve to the lowest id.
using CountTable = std::map<VocabId, std::int64_t>;

// Deterministic copy-from-context model. For each masked position it predicts
// the most frequent countable token among the unmasked positions of the same
// input (context included); ties go to the lowest vocab id. If the input has
// no countable unmasked token it falls back to argmax(overlay + base), same
// tie-break. Special symbols and the filler are not countable. Returns the unk
// id when both tables are empty.
std::vector<VocabId> reference_predict_rule(const MaskedInstance& instance,
                                            const CountTable& base_counts,
                                            const CountTable* overlay_counts,
                                            const std::unordered_set<VocabId>& neutral_ids,
                                            VocabId unk_id);

struct ReferenceBackendOptions {
  // Wordpieces in descending frequency order; continuation pieces carry "##".
  // Empty selects the built-in English vocabulary.
  std::vector<std::string> vocabulary;
  // Overrides the rank-derived base counts (count = vocabulary size - rank).
  std::optional<CountTable> base_counts;
  int max_input_length = 512;
  bool enable_tune = true;
};

// In-process reference backend.
//
// Tokenization lowercases ASCII, splits on whitespace and punctuation, and
// applies greedy longest-match wordpiece segmentation over the vocabulary.
// Words that cannot be segmented become a single Normal token whose id is a
// stable hash of the word, placed above every vocabulary id.
//
// Tuning builds the masked copies of the summary (see tuning_instances) and
// adds one overlay count per masked target. Sessions never alter the base
// counts.
class ReferenceBackend : public ModelBackend {
 public:
  static constexpr VocabId kFirstHashedId = 1'000'000;

  explicit ReferenceBackend(ReferenceBackendOptions options = {});

  std::string identity() const override;
  Capabilities capabilities() const override;
  SpecialIds special_ids() const override { return ids_; }
  int max_input_length() const override { return options_.max_input_length; }

  std::vector<Sentence> tokenize(std::span<const std::string> texts) override;
  Predictions predict(std::span<const MaskedInstance> batch,
                      const ModelSession* session = nullptr) override;
  ModelSession spawn_tuned(const TokenizedText& summary, const TuningPolicy& policy) override;
  void release(const ModelSession& session) override;

  const CountTable& base_counts() const { return base_counts_; }
  // Overlay of a live session; throws BackendError for unknown sessions.
  CountTable overlay_counts(const std::string& session_id) const;
  std::size_t live_sessions() const;
  const std::unordered_set<VocabId>& neutral_ids() const { return neutral_; }
  // Id of a vocabulary piece (with "##" for continuations), if present.
  std::optional<VocabId> id_of(const std::string& piece) const;
  // Ids eligible as random replacements: the vocabulary without specials.
  std::span<const VocabId> replacement_pool() const { return replacement_pool_; }

  static const std::vector<std::string>& builtin_vocabulary();

 private:
  std::vector<Token> tokenize_word(const std::string& word) const;
  Sentence tokenize_one(const std::string& text) const;

  ReferenceBackendOptions options_;
  SpecialIds ids_;
  std::unordered_map<std::string, VocabId> piece_ids_;
  std::vector<VocabId> replacement_pool_;
  CountTable base_counts_;
  std::unordered_set<VocabId> neutral_;
  std::string vocab_digest_;

  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, CountTable> sessions_;
  std::uint64_t next_session_ = 0;
};

}  // namespace blanc
