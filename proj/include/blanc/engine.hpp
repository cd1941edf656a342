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
#include <string>
#include <vector>

#include "blanc/backend.hpp"
#include "blanc/measure_config.hpp"
#include "blanc/tokenization.hpp"

namespace blanc {

// Success counts for masked tokens. First index: the unassisted (base) model
// was right; second index: the assisted model was right.
struct CountMatrix {
  std::int64_t k00 = 0;
  std::int64_t k01 = 0;
  std::int64_t k10 = 0;
  std::int64_t k11 = 0;

  std::int64_t total() const { return k00 + k01 + k10 + k11; }
  std::int64_t base_correct() const { return k10 + k11; }
  std::int64_t assisted_correct() const { return k01 + k11; }
  void add(bool base_ok, bool assisted_ok);
  double score() const;

  CountMatrix& operator+=(const CountMatrix& o);
  friend CountMatrix operator+(CountMatrix a, const CountMatrix& b) { return a += b; }
  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;
};

// (k01 - k10) / N, or 0 when N == 0. Equals assisted accuracy minus base
// accuracy.
double score_from_counts(std::int64_t k00, std::int64_t k01, std::int64_t k10, std::int64_t k11);

struct BlancResult {
  CountMatrix counts;
  double score = 0.0;
  std::vector<CountMatrix> per_sentence;  // one per text sentence
  std::vector<std::string> warnings;

  friend bool operator==(const BlancResult& a, const BlancResult& b) {
    return a.counts == b.counts && a.score == b.score && a.per_sentence == b.per_sentence;
  }
};

// Sums sentence matrices into the document result.
BlancResult pool_sentences(std::vector<CountMatrix> per_sentence);

// BLANC-help. For every sentence and every inference pass with at least one
// masked token, the assisted input is
//   summary + [SEP] + masked sentence
// and the base input is the same with the summary replaced by as many filler
// symbols. Sentences are truncated to fit the backend limit (warning recorded).
// Throws InputTooLongError if the summary alone does not fit.
BlancResult blanc_help(const TokenizedText& text, const TokenizedText& summary,
                       const MeasureConfig& config, ModelBackend& backend);

// BLANC-tune. The model is tuned on the summary into a private session, then
// each masked sentence (no context) is predicted by the session (assisted) and
// by the base model.
BlancResult blanc_tune(const TokenizedText& text, const TokenizedText& summary,
                       const MeasureConfig& config, ModelBackend& backend);

// Dispatches on config.family.
BlancResult evaluate(const TokenizedText& text, const TokenizedText& summary,
                     const MeasureConfig& config, ModelBackend& backend);

}  // namespace blanc
