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

#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blanc/masking.hpp"
#include "blanc/tokenization.hpp"

namespace blanc {

struct Capabilities {
  bool tokenize = true;
  bool predict = true;
  bool tune = false;
};

// Vocabulary ids of the symbols the engine needs. `filler` is the neutral
// symbol repeated in place of the summary for the unassisted BLANC-help input.
struct SpecialIds {
  VocabId pad = 0;
  VocabId unk = 1;
  VocabId cls = 2;
  VocabId sep = 3;
  VocabId mask = 4;
  VocabId filler = 5;

  friend bool operator==(const SpecialIds&, const SpecialIds&) = default;
};

// One model input with some positions hidden. Positions below context_len
// belong to the prepended context (summary, filler and separator) and are
// never masked.
struct MaskedInstance {
  std::vector<VocabId> input_ids;
  std::vector<int> masked_positions;  // strictly increasing
  std::vector<VocabId> targets;       // original ids at masked_positions
  int context_len = 0;

  // Throws std::invalid_argument if the invariants do not hold.
  void validate() const;
};

struct ModelSession {
  std::string session_id;
  std::string base_identity;
  std::string tuned_on;  // fingerprint of the summary token ids
};

// predictions[i][k] is the predicted id for batch[i].masked_positions[k].
using Predictions = std::vector<std::vector<VocabId>>;

class ModelBackend {
 public:
  virtual ~ModelBackend() = default;

  virtual std::string identity() const = 0;
  virtual Capabilities capabilities() const = 0;
  virtual SpecialIds special_ids() const = 0;
  virtual int max_input_length() const = 0;

  // One classified token list per input text.
  virtual std::vector<Sentence> tokenize(std::span<const std::string> texts) = 0;

  // Predictions from the base model, or from `session` when given.
  virtual Predictions predict(std::span<const MaskedInstance> batch,
                              const ModelSession* session = nullptr) = 0;

  // Creates an isolated tuned copy; the base model is not modified. Throws
  // CapabilityError when tuning is unsupported.
  virtual ModelSession spawn_tuned(const TokenizedText& summary, const TuningPolicy& policy) = 0;

  virtual void release(const ModelSession& session) = 0;
};

// Releases a session when it goes out of scope.
class ScopedSession {
 public:
  ScopedSession(ModelBackend& backend, ModelSession session)
      : backend_(&backend), session_(std::move(session)) {}
  ScopedSession(const ScopedSession&) = delete;
  ScopedSession& operator=(const ScopedSession&) = delete;
  ~ScopedSession();

  const ModelSession& get() const { return session_; }

 private:
  ModelBackend* backend_;
  ModelSession session_;
};

std::string fingerprint(const TokenizedText& text);

// Masked copies of the summary used for tuning: for every summary sentence and
// every pass of its tuning schedule, one instance with the corruption plan
// applied. Targets are always the original ids. Replacement ids are drawn
// uniformly from `replacement_pool`.
std::vector<MaskedInstance> tuning_instances(const TokenizedText& summary,
                                             const TuningPolicy& policy, const SpecialIds& ids,
                                             std::span<const VocabId> replacement_pool);

// Forwards to another backend and counts calls.
class CountingBackend : public ModelBackend {
 public:
  explicit CountingBackend(ModelBackend& inner) : inner_(inner) {}

  std::string identity() const override { return inner_.identity(); }
  Capabilities capabilities() const override { return inner_.capabilities(); }
  SpecialIds special_ids() const override { return inner_.special_ids(); }
  int max_input_length() const override { return inner_.max_input_length(); }
  std::vector<Sentence> tokenize(std::span<const std::string> texts) override;
  Predictions predict(std::span<const MaskedInstance> batch,
                      const ModelSession* session = nullptr) override;
  ModelSession spawn_tuned(const TokenizedText& summary, const TuningPolicy& policy) override;
  void release(const ModelSession& session) override { inner_.release(session); }

  std::uint64_t tokenize_calls() const { return tokenize_calls_; }
  std::uint64_t predict_calls() const { return predict_calls_; }
  std::uint64_t tune_calls() const { return tune_calls_; }
  // predict + tune; tokenization is cheap and not counted.
  std::uint64_t model_calls() const { return predict_calls_ + tune_calls_; }

 private:
  ModelBackend& inner_;
  std::atomic<std::uint64_t> tokenize_calls_{0};
  std::atomic<std::uint64_t> predict_calls_{0};
  std::atomic<std::uint64_t> tune_calls_{0};
};

}  // namespace blanc
