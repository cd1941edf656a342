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

#include "blanc/reference_backend.hpp"

#include <cctype>
#include <cstdio>

#include "blanc/error.hpp"
#include "blanc/random.hpp"

namespace blanc {

namespace {

constexpr const char* kSpecialSymbols[] = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

VocabId argmax(const CountTable& counts, const std::unordered_set<VocabId>& neutral) {
  VocabId best = -1;
  std::int64_t best_count = 0;
  for (const auto& [id, count] : counts) {
    if (count <= 0 || neutral.contains(id)) continue;
    if (count > best_count) {
      best = id;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

std::vector<VocabId> reference_predict_rule(const MaskedInstance& instance,
                                            const CountTable& base_counts,
                                            const CountTable* overlay_counts,
                                            const std::unordered_set<VocabId>& neutral_ids,
                                            VocabId unk_id) {
  std::vector<VocabId> out;
  if (instance.masked_positions.empty()) return out;

  CountTable in_context;
  std::size_t next_masked = 0;
  for (std::size_t i = 0; i < instance.input_ids.size(); ++i) {
    if (next_masked < instance.masked_positions.size() &&
        static_cast<std::size_t>(instance.masked_positions[next_masked]) == i) {
      ++next_masked;
      continue;
    }
    ++in_context[instance.input_ids[i]];
  }
  VocabId prediction = argmax(in_context, neutral_ids);
  if (prediction < 0) {
    CountTable merged = base_counts;
    if (overlay_counts)
      for (const auto& [id, count] : *overlay_counts) merged[id] += count;
    prediction = argmax(merged, neutral_ids);
    if (prediction < 0) prediction = unk_id;
  }
  out.assign(instance.masked_positions.size(), prediction);
  return out;
}

ReferenceBackend::ReferenceBackend(ReferenceBackendOptions options) : options_(std::move(options)) {
  const auto& vocab = options_.vocabulary.empty() ? builtin_vocabulary() : options_.vocabulary;
  VocabId next = 0;
  for (const char* s : kSpecialSymbols) piece_ids_.emplace(s, next++);
  ids_.pad = 0;
  ids_.unk = 1;
  ids_.cls = 2;
  ids_.sep = 3;
  ids_.mask = 4;

  std::string digest_bytes;
  for (const auto& piece : vocab) {
    if (piece.empty() || piece == "##") throw ConfigError("empty vocabulary entry");
    if (!piece_ids_.emplace(piece, next).second) continue;
    replacement_pool_.push_back(next);
    digest_bytes += piece + '\n';
    ++next;
  }
  if (next >= kFirstHashedId) throw ConfigError("vocabulary too large for the reference backend");

  auto dot = piece_ids_.find(".");
  if (dot == piece_ids_.end()) throw ConfigError("reference vocabulary must contain \".\"");
  ids_.filler = dot->second;
  neutral_ = {ids_.pad, ids_.unk, ids_.cls, ids_.sep, ids_.mask, ids_.filler};

  if (options_.base_counts) {
    base_counts_ = *options_.base_counts;
    for (const auto& [id, count] : base_counts_)
      if (count < 0) throw ConfigError("base counts must be non-negative");
  } else {
    const auto size = static_cast<std::int64_t>(replacement_pool_.size());
    for (std::int64_t rank = 0; rank < size; ++rank) base_counts_[replacement_pool_[rank]] = size - rank;
  }

  for (const auto& [id, count] : base_counts_)
    digest_bytes += std::to_string(id) + ':' + std::to_string(count) + ',';
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(digest_bytes)));
  vocab_digest_ = buf;
}

std::string ReferenceBackend::identity() const {
  return "reference/v1/" + vocab_digest_ + "/max" + std::to_string(options_.max_input_length);
}

Capabilities ReferenceBackend::capabilities() const {
  Capabilities c;
  c.tune = options_.enable_tune;
  return c;
}

std::optional<VocabId> ReferenceBackend::id_of(const std::string& piece) const {
  auto it = piece_ids_.find(piece);
  if (it == piece_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<Token> ReferenceBackend::tokenize_word(const std::string& word) const {
  if (auto id = id_of(word)) return {make_token(word, TokenKind::Normal, *id)};

  // Greedy longest-match-first segmentation.
  std::vector<WordPiece> pieces;
  std::size_t start = 0;
  while (start < word.size()) {
    std::size_t end = word.size();
    std::optional<VocabId> found;
    std::string piece;
    while (end > start) {
      piece = word.substr(start, end - start);
      if (start > 0) piece = "##" + piece;
      if ((found = id_of(piece))) break;
      --end;
    }
    if (!found) {
      pieces.clear();
      break;
    }
    pieces.push_back({piece, *found});
    start = end;
  }
  if (pieces.size() >= 2) return classify_word(pieces);

  const VocabId hashed =
      kFirstHashedId + static_cast<VocabId>(fnv1a64(word) % 1'000'000'000ULL);
  return {make_token(word, TokenKind::Normal, hashed)};
}

Sentence ReferenceBackend::tokenize_one(const std::string& text) const {
  Sentence out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    auto tokens = tokenize_word(word);
    out.insert(out.end(), tokens.begin(), tokens.end());
    word.clear();
  };
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      word.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
    } else {
      flush();
      if (!std::isspace(c) && std::isprint(c)) {
        word.push_back(static_cast<char>(c));
        flush();
      }
    }
  }
  flush();
  return out;
}

std::vector<Sentence> ReferenceBackend::tokenize(std::span<const std::string> texts) {
  std::vector<Sentence> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(tokenize_one(t));
  return out;
}

Predictions ReferenceBackend::predict(std::span<const MaskedInstance> batch,
                                      const ModelSession* session) {
  const CountTable* overlay = nullptr;
  std::shared_lock lock(sessions_mutex_);
  if (session) {
    auto it = sessions_.find(session->session_id);
    if (it == sessions_.end()) throw BackendError("unknown session: " + session->session_id);
    overlay = &it->second;
  }
  Predictions out;
  out.reserve(batch.size());
  for (const auto& instance : batch) {
    instance.validate();
    out.push_back(reference_predict_rule(instance, base_counts_, overlay, neutral_, ids_.unk));
  }
  return out;
}

ModelSession ReferenceBackend::spawn_tuned(const TokenizedText& summary,
                                           const TuningPolicy& policy) {
  if (!options_.enable_tune) throw CapabilityError("reference backend: tuning disabled");
  policy.validate();
  CountTable overlay;
  for (const auto& inst : tuning_instances(summary, policy, ids_, replacement_pool_))
    for (VocabId target : inst.targets) ++overlay[target];

  std::unique_lock lock(sessions_mutex_);
  ModelSession session;
  session.session_id = "ref-" + std::to_string(next_session_++);
  session.base_identity = identity();
  session.tuned_on = fingerprint(summary);
  sessions_.emplace(session.session_id, std::move(overlay));
  return session;
}

void ReferenceBackend::release(const ModelSession& session) {
  std::unique_lock lock(sessions_mutex_);
  if (sessions_.erase(session.session_id) == 0)
    throw BackendError("unknown session: " + session.session_id);
}

CountTable ReferenceBackend::overlay_counts(const std::string& session_id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw BackendError("unknown session: " + session_id);
  return it->second;
}

std::size_t ReferenceBackend::live_sessions() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

}  // namespace blanc
