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

#include "blanc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "blanc/error.hpp"
#include "blanc/random.hpp"
#include "blanc/tokenization.hpp"

namespace blanc {

using nlohmann::json;

bool Corpus::has_group(const std::string& group) const {
  for (const auto& s : samples)
    for (const auto& [quality, groups] : s.human)
      if (groups.contains(group)) return true;
  return false;
}

CorpusFormat corpus_format_from_string(std::string_view name) {
  if (name == "jsonl" || name == "generic") return CorpusFormat::JsonlGeneric;
  if (name == "summeval") return CorpusFormat::SummEval;
  throw CorpusError("unknown corpus format: " + std::string(name));
}

namespace {

class LineContext {
 public:
  LineContext(const std::string& source, int line) : prefix_(source + ":" + std::to_string(line) + ": ") {}

  [[noreturn]] void fail(const std::string& message) const { throw CorpusError(prefix_ + message); }

  std::string string_field(const json& j, const char* name) const {
    if (!j.contains(name)) fail(std::string("missing field \"") + name + "\"");
    if (!j[name].is_string()) fail(std::string("field \"") + name + "\" must be a string");
    return j[name].get<std::string>();
  }

  double number(const json& j, const std::string& where) const {
    if (!j.is_number()) fail("field \"" + where + "\" must be a number");
    return j.get<double>();
  }

 private:
  std::string prefix_;
};

AnnotatedSample generic_sample(const json& j, const LineContext& ctx) {
  AnnotatedSample s;
  if (j.contains("id") && j["id"].is_number_integer())
    s.sample_id = std::to_string(j["id"].get<long long>());
  else
    s.sample_id = ctx.string_field(j, "id");
  s.text = ctx.string_field(j, "text");
  s.summary = ctx.string_field(j, "summary");
  if (j.contains("provenance")) s.provenance = ctx.string_field(j, "provenance");
  if (j.contains("scores") && !j["scores"].is_null()) {
    const json& scores = j["scores"];
    if (!scores.is_object()) ctx.fail("field \"scores\" must be an object");
    for (const auto& [quality, groups] : scores.items()) {
      if (!groups.is_object()) ctx.fail("field \"scores." + quality + "\" must be an object");
      for (const auto& [group, values] : groups.items()) {
        const std::string where = "scores." + quality + "." + group;
        if (!values.is_array()) ctx.fail("field \"" + where + "\" must be an array");
        auto& out = s.human[quality][group];
        for (const auto& v : values) out.push_back(ctx.number(v, where));
      }
    }
  }
  return s;
}

AnnotatedSample summeval_sample(const json& j, const LineContext& ctx) {
  AnnotatedSample s;
  s.sample_id = ctx.string_field(j, "id");
  if (j.contains("model_id")) s.sample_id += "/" + ctx.string_field(j, "model_id");
  s.text = ctx.string_field(j, "text");
  s.summary = ctx.string_field(j, "decoded");
  s.provenance = "summeval";
  for (const auto& [field, group] : {std::pair{"expert_annotations", "expert"},
                                     std::pair{"turker_annotations", "turker"}}) {
    if (!j.contains(field)) continue;
    if (!j[field].is_array()) ctx.fail(std::string("field \"") + field + "\" must be an array");
    for (const auto& annotation : j[field]) {
      if (!annotation.is_object()) ctx.fail(std::string("entries of \"") + field + "\" must be objects");
      for (const auto& [quality, value] : annotation.items())
        s.human[quality][group].push_back(ctx.number(value, std::string(field) + "." + quality));
    }
  }
  return s;
}

}  // namespace

Corpus parse_corpus(std::istream& in, CorpusFormat format, std::string corpus_id,
                    const std::string& source_name) {
  Corpus corpus;
  corpus.id = std::move(corpus_id);
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const LineContext ctx(source_name, line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      ctx.fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) ctx.fail("record must be a JSON object");
    AnnotatedSample s = format == CorpusFormat::JsonlGeneric ? generic_sample(j, ctx) : summeval_sample(j, ctx);
    if (!seen.insert(s.sample_id).second) ctx.fail("duplicate sample id \"" + s.sample_id + "\"");
    corpus.samples.push_back(std::move(s));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus file: " + path.string());
  return parse_corpus(in, format, path.stem().string(), path.string());
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.samples) {
    json j = {{"id", s.sample_id}, {"text", s.text}, {"summary", s.summary}};
    if (!s.provenance.empty()) j["provenance"] = s.provenance;
    if (!s.human.empty()) {
      json scores = json::object();
      for (const auto& [quality, groups] : s.human)
        for (const auto& [group, values] : groups) scores[quality][group] = values;
      j["scores"] = scores;
    }
    out << j.dump() << '\n';
  }
}

stats::HumanScores group_means(const Corpus& corpus, const std::string& group) {
  stats::HumanScores out;
  if (corpus.samples.empty()) return out;
  std::set<std::string> qualities;
  for (const auto& s : corpus.samples)
    for (const auto& [quality, groups] : s.human) qualities.insert(quality);
  for (const auto& quality : qualities) {
    std::vector<double> means;
    means.reserve(corpus.samples.size());
    for (const auto& s : corpus.samples) {
      auto q = s.human.find(quality);
      if (q == s.human.end()) break;
      auto g = q->second.find(group);
      if (g == q->second.end() || g->second.empty()) break;
      means.push_back(std::accumulate(g->second.begin(), g->second.end(), 0.0) /
                      static_cast<double>(g->second.size()));
    }
    if (means.size() == corpus.samples.size()) out[quality] = std::move(means);
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& sentences, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += ' ';
    out += sentences[i];
  }
  return out;
}

}  // namespace

std::string synth_top_sentences(std::string_view document, int k) {
  const auto sentences = segment_sentences(document);
  const std::size_t n = std::min<std::size_t>(sentences.size(), static_cast<std::size_t>(std::max(k, 0)));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return join(sentences, idx);
}

std::vector<std::size_t> choose_sentence_indices(std::size_t count, int k, std::uint64_t seed) {
  std::vector<std::size_t> pool(count);
  std::iota(pool.begin(), pool.end(), 0);
  const std::size_t take = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(k, 0)));
  Rng rng(seed);
  // partial Fisher-Yates
  for (std::size_t i = 0; i < take; ++i) std::swap(pool[i], pool[i + rng.below(count - i)]);
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::string synth_random_sentences(std::string_view document, int k, std::uint64_t seed) {
  const auto sentences = segment_sentences(document);
  return join(sentences, choose_sentence_indices(sentences.size(), k, seed));
}

std::vector<DatedDocument> sample_per_day(std::span<const DatedDocument> documents, int per_day,
                                          std::uint64_t seed) {
  std::map<std::string, std::vector<std::size_t>> by_day;
  for (std::size_t i = 0; i < documents.size(); ++i) by_day[documents[i].date].push_back(i);
  std::vector<DatedDocument> out;
  std::uint64_t day_index = 0;
  for (const auto& [day, members] : by_day) {
    for (std::size_t pick : choose_sentence_indices(members.size(), per_day, mix_seed(seed, day_index++)))
      out.push_back(documents[members[pick]]);
  }
  return out;
}

Corpus synthesize_corpus(std::span<const DatedDocument> documents, SynthSummary kind, int k,
                         std::uint64_t seed, std::string corpus_id) {
  Corpus corpus;
  corpus.id = std::move(corpus_id);
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const auto& d = documents[i];
    if (segment_sentences(d.text).empty()) continue;
    AnnotatedSample s;
    s.sample_id = d.id;
    s.text = d.text;
    s.summary = kind == SynthSummary::TopSentences ? synth_top_sentences(d.text, k)
                                                   : synth_random_sentences(d.text, k, mix_seed(seed, i));
    s.provenance = (kind == SynthSummary::TopSentences ? "top-" : "random-") + std::to_string(k) +
                   (d.date.empty() ? "" : " " + d.date);
    corpus.samples.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace blanc
