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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "blanc/backend.hpp"
#include "blanc/corpus.hpp"
#include "blanc/measure_config.hpp"
#include "blanc/score_cache.hpp"

namespace blanc {

struct SweepOptions {
  ScoreCache* cache = nullptr;  // optional
  int workers = 1;
};

// Per-sample outcomes of one config on one corpus, plus summary statistics
// over the samples that were not skipped.
struct ConfigEvaluation {
  std::string corpus_id;
  MeasureConfig config;
  std::vector<SampleOutcome> samples;  // corpus order
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t n = 0;

  std::vector<std::string> skipped_ids() const;
  std::vector<double> scores() const;  // non-skipped samples, corpus order
};

// Recomputes mean, standard error and n from the per-sample outcomes. Throws
// Error when every sample was skipped.
void summarize(ConfigEvaluation& evaluation);

// Scores one sample: tokenizes text and summary through the backend and runs
// the engine. Summaries that do not fit the backend are reported as skipped.
SampleOutcome score_sample(const AnnotatedSample& sample, const MeasureConfig& config,
                           ModelBackend& backend);

// Mean score of `config` over the corpus. Cached outcomes are reused and new
// ones stored. Throws std::invalid_argument for an empty corpus and Error if
// every sample is skipped.
ConfigEvaluation evaluate_config(const Corpus& corpus, const MeasureConfig& config,
                                 ModelBackend& backend, const SweepOptions& options = {});

// (mean_opt - mean_alt) / mean_opt; nullopt when mean_opt == 0.
std::optional<double> drop_fraction(double mean_opt, double mean_alt);

struct SweepRow {
  std::string corpus_id;
  std::string label;
  std::string config_hash;
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t n = 0;
  std::vector<std::string> skipped;
  std::optional<double> drop;  // relative to the corpus optimum
  bool optimal = false;
};

struct CorpusOptimum {
  std::string corpus_id;
  std::string label;
  std::vector<std::string> tied;  // every label sharing the maximal mean
};

struct SweepReport {
  std::vector<std::string> corpora;
  std::vector<MeasureConfig> family;
  std::vector<SweepRow> rows;  // corpus-major, family order within a corpus
  std::vector<CorpusOptimum> optima;
  bool universal = false;  // every corpus has the same optimum
  std::vector<std::string> warnings;

  const SweepRow& row(const std::string& corpus_id, const std::string& label) const;
  // Rows of non-optimal configs, i.e. the drop table.
  std::vector<SweepRow> drop_table() const;

  // corpus,config,config_hash,mean,stderr,n,skipped,drop,optimal
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

// Assembles the report from already-evaluated grid cells; grid[c][f] is corpus
// c under family member f. Pure: no backend access.
SweepReport build_report(const std::vector<std::vector<ConfigEvaluation>>& grid);

// Evaluates every (corpus, config) cell and selects, per corpus, the config
// with the highest mean score. Ties go to the lexicographically smallest label.
SweepReport max_help_select(std::span<const Corpus> corpora, std::span<const MeasureConfig> family,
                            ModelBackend& backend, const SweepOptions& options = {});

}  // namespace blanc
