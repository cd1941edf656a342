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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/stats.hpp"

namespace blanc {

struct AnnotatedSample {
  std::string sample_id;
  std::string text;
  std::string summary;
  // quality -> annotator group -> one score per annotator
  std::map<std::string, std::map<std::string, std::vector<double>>> human;
  std::string provenance;

  friend bool operator==(const AnnotatedSample&, const AnnotatedSample&) = default;
};

struct Corpus {
  std::string id;
  std::vector<AnnotatedSample> samples;

  bool has_group(const std::string& group) const;
  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class CorpusFormat {
  // {"id", "text", "summary", "scores"?: {quality: {group: [values]}}, "provenance"?}
  JsonlGeneric,
  // SummEval annotations: {"id", "model_id"?, "text", "decoded",
  //   "expert_annotations": [{quality: value}], "turker_annotations": [...]}
  SummEval,
};

CorpusFormat corpus_format_from_string(std::string_view name);

// Reads a JSON-lines corpus. Blank lines are skipped and a UTF-8 BOM is
// tolerated. Throws CorpusError naming the line and field on schema
// violations or duplicate ids.
Corpus parse_corpus(std::istream& in, CorpusFormat format, std::string corpus_id,
                    const std::string& source_name = "<input>");
// Corpus id defaults to the file stem.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

// Writes the generic JSONL form.
void write_corpus(const Corpus& corpus, std::ostream& out);

// Per-sample mean over the annotators of `group`, for every quality that all
// samples have for that group.
stats::HumanScores group_means(const Corpus& corpus, const std::string& group);

// The first min(k, count) sentences of the document, in order.
std::string synth_top_sentences(std::string_view document, int k);

// k distinct sentences drawn uniformly without replacement, re-joined in
// document order. k >= count returns every sentence.
std::string synth_random_sentences(std::string_view document, int k, std::uint64_t seed);

// Indices chosen by synth_random_sentences for a document of `count` sentences.
std::vector<std::size_t> choose_sentence_indices(std::size_t count, int k, std::uint64_t seed);

struct DatedDocument {
  std::string id;
  std::string date;  // any sortable day key, e.g. 2019-03-14
  std::string text;
};

// Draws up to `per_day` documents uniformly from each day, days in sorted
// order, documents within a day in their input order.
std::vector<DatedDocument> sample_per_day(std::span<const DatedDocument> documents, int per_day,
                                          std::uint64_t seed);

enum class SynthSummary { TopSentences, RandomSentences };

// One sample per document, with the document as text and a synthetic
// k-sentence summary. Documents with no sentences are skipped.
Corpus synthesize_corpus(std::span<const DatedDocument> documents, SynthSummary kind, int k,
                         std::uint64_t seed, std::string corpus_id);

}  // namespace blanc
