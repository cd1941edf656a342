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


#include "oracle/golden.hpp"

#include <sstream>

#include "oracle/oracle.hpp"

namespace blanc_oracle {

namespace {

struct Row {
  const char* label;
  bool tune;
  int gap, gap_mask;
  Thresholds t;
  int gap_tune, gap_mask_tune;
  Thresholds tune_t;
};

// Written out by hand rather than read from the library's built-ins.
const Row kRows[] = {
    {"help-max-help", false, 2, 1, {6, 1, 1}, 0, 0, {}},
    {"help-max-human", false, 2, 1, {4, 1, 100}, 0, 0, {}},
    {"tune-max-help", true, 3, 2, {6, 1, 1}, 4, 3, {6, 1, 1}},
    {"tune-max-human", true, 2, 1, {4, 1, 100}, 2, 1, {4, 1, 100}},
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string golden_scores_csv(const blanc::Corpus& corpus, blanc::ReferenceBackend& backend) {
  Model model;
  model.base = backend.base_counts();
  model.filler = backend.special_ids().filler;
  std::string out = "corpus,config,sample_id,score,k00,k01,k10,k11,skipped\n";
  for (const auto& row : kRows)
    for (const auto& s : corpus.samples) {
      const auto text = lines_of(blanc::tokenize_text(s.text, backend));
      const auto summary = lines_of(blanc::tokenize_text(s.summary, backend));
      const Outcome o = row.tune ? tune_even(text, summary, row.gap, row.gap_mask, row.t, row.gap_tune,
                                             row.gap_mask_tune, row.tune_t, model)
                                 : help(text, summary, row.gap, row.gap_mask, row.t, model);
      out += corpus.id + "," + row.label + "," + s.sample_id + "," + num(o.score) + "," +
             std::to_string(o.total.k00) + "," + std::to_string(o.total.k01) + "," + std::to_string(o.total.k10) +
             "," + std::to_string(o.total.k11) + ",\n";
    }
  return out;
}

}  // namespace blanc_oracle
