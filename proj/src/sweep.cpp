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

#include "blanc/sweep.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "blanc/engine.hpp"
#include "blanc/error.hpp"
#include "blanc/parallel.hpp"
#include "blanc/stats.hpp"
#include "blanc/tokenization.hpp"

namespace blanc {

using nlohmann::json;

std::vector<std::string> ConfigEvaluation::skipped_ids() const {
  std::vector<std::string> out;
  for (const auto& s : samples)
    if (s.skipped()) out.push_back(s.sample_id);
  return out;
}

std::vector<double> ConfigEvaluation::scores() const {
  std::vector<double> out;
  for (const auto& s : samples)
    if (!s.skipped()) out.push_back(s.result->score);
  return out;
}

void summarize(ConfigEvaluation& evaluation) {
  const auto scores = evaluation.scores();
  if (scores.empty())
    throw Error("config \"" + evaluation.config.label + "\": every sample of corpus \"" +
                evaluation.corpus_id + "\" was skipped");
  const auto ms = stats::mean_stderr(scores);
  evaluation.mean = ms.mean;
  evaluation.standard_error = ms.standard_error;
  evaluation.n = scores.size();
}

SampleOutcome score_sample(const AnnotatedSample& sample, const MeasureConfig& config,
                           ModelBackend& backend) {
  SampleOutcome outcome;
  outcome.sample_id = sample.sample_id;
  const TokenizedText text = tokenize_text(sample.text, backend);
  const TokenizedText summary = tokenize_text(sample.summary, backend);
  try {
    outcome.result = evaluate(text, summary, config, backend);
  } catch (const InputTooLongError& e) {
    outcome.skip_reason = e.what();
  }
  return outcome;
}

ConfigEvaluation evaluate_config(const Corpus& corpus, const MeasureConfig& config,
                                 ModelBackend& backend, const SweepOptions& options) {
  if (corpus.samples.empty()) throw std::invalid_argument("corpus \"" + corpus.id + "\" is empty");
  config.validate();
  if (config.family == Family::Tune && !backend.capabilities().tune)
    throw CapabilityError("backend " + backend.identity() + " cannot tune (config \"" + config.label + "\")");

  ConfigEvaluation ev;
  ev.corpus_id = corpus.id;
  ev.config = config;
  ev.samples.resize(corpus.samples.size());
  const std::string hash = config.hash();
  const std::string identity = backend.identity();

  parallel_for(corpus.samples.size(), options.workers, [&](std::size_t i) {
    const AnnotatedSample& sample = corpus.samples[i];
    const CacheKey key{corpus.id, sample.sample_id, hash, identity};
    if (options.cache) {
      if (auto hit = options.cache->get(key)) {
        ev.samples[i] = std::move(*hit);
        return;
      }
    }
    ev.samples[i] = score_sample(sample, config, backend);
    if (options.cache) options.cache->put(key, ev.samples[i]);
  });
  summarize(ev);
  return ev;
}

std::optional<double> drop_fraction(double mean_opt, double mean_alt) {
  if (mean_opt == 0.0) return std::nullopt;
  return (mean_opt - mean_alt) / mean_opt;
}

const SweepRow& SweepReport::row(const std::string& corpus_id, const std::string& label) const {
  for (const auto& r : rows)
    if (r.corpus_id == corpus_id && r.label == label) return r;
  throw std::out_of_range("no sweep row for " + corpus_id + " / " + label);
}

std::vector<SweepRow> SweepReport::drop_table() const {
  std::vector<SweepRow> out;
  for (const auto& r : rows)
    if (!r.optimal) out.push_back(r);
  return out;
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(1, sep) : "") + items[i];
  return out;
}

}  // namespace

std::string SweepReport::to_csv() const {
  std::string out = "corpus,config,config_hash,mean,stderr,n,skipped,drop,optimal\n";
  for (const auto& r : rows) {
    out += csv_field(r.corpus_id) + "," + csv_field(r.label) + "," + r.config_hash + "," + num(r.mean) + "," +
           num(r.standard_error) + "," + std::to_string(r.n) + "," + csv_field(join(r.skipped, ';')) + "," +
           (r.drop ? num(*r.drop) : "nan") + "," + (r.optimal ? "1" : "0") + "\n";
  }
  return out;
}

json SweepReport::to_json() const {
  json j;
  j["corpora"] = corpora;
  j["family"] = json::array();
  for (const auto& c : family) j["family"].push_back(c.to_json());
  j["rows"] = json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"corpus", r.corpus_id},
                         {"config", r.label},
                         {"config_hash", r.config_hash},
                         {"mean", r.mean},
                         {"stderr", r.standard_error},
                         {"n", r.n},
                         {"skipped", r.skipped},
                         {"drop", r.drop ? json(*r.drop) : json(nullptr)},
                         {"optimal", r.optimal}});
  }
  j["optima"] = json::array();
  for (const auto& o : optima) j["optima"].push_back({{"corpus", o.corpus_id}, {"config", o.label}, {"tied", o.tied}});
  j["universal"] = universal;
  j["warnings"] = warnings;
  return j;
}

SweepReport build_report(const std::vector<std::vector<ConfigEvaluation>>& grid) {
  SweepReport report;
  if (grid.empty()) return report;
  for (const auto& ev : grid.front()) report.family.push_back(ev.config);
  std::set<std::string> labels;
  for (const auto& c : report.family)
    if (!labels.insert(c.label).second) throw ConfigError("duplicate config label \"" + c.label + "\"");

  std::set<std::string> optimum_labels;
  for (const auto& cells : grid) {
    if (cells.size() != report.family.size()) throw std::invalid_argument("ragged sweep grid");
    const std::string& corpus_id = cells.front().corpus_id;
    report.corpora.push_back(corpus_id);

    double best = cells.front().mean;
    for (const auto& ev : cells) best = std::max(best, ev.mean);
    CorpusOptimum opt;
    opt.corpus_id = corpus_id;
    for (const auto& ev : cells)
      if (ev.mean == best) opt.tied.push_back(ev.config.label);
    std::sort(opt.tied.begin(), opt.tied.end());
    opt.label = opt.tied.front();
    if (opt.tied.size() > 1)
      report.warnings.push_back(corpus_id + ": tie between " + join(opt.tied, ',') + "; chose " + opt.label);
    if (best == 0.0) report.warnings.push_back(corpus_id + ": optimal mean is 0, drop fractions undefined");

    for (const auto& ev : cells) {
      SweepRow row;
      row.corpus_id = corpus_id;
      row.label = ev.config.label;
      row.config_hash = ev.config.hash();
      row.mean = ev.mean;
      row.standard_error = ev.standard_error;
      row.n = ev.n;
      row.skipped = ev.skipped_ids();
      row.optimal = ev.config.label == opt.label;
      row.drop = row.optimal ? std::optional<double>(0.0) : drop_fraction(best, ev.mean);
      report.rows.push_back(std::move(row));
    }
    optimum_labels.insert(opt.label);
    report.optima.push_back(std::move(opt));
  }
  report.universal = optimum_labels.size() == 1;
  return report;
}

SweepReport max_help_select(std::span<const Corpus> corpora, std::span<const MeasureConfig> family,
                            ModelBackend& backend, const SweepOptions& options) {
  if (family.empty()) throw std::invalid_argument("empty measure family");
  std::vector<std::vector<ConfigEvaluation>> grid;
  for (const auto& corpus : corpora) {
    auto& cells = grid.emplace_back();
    for (const auto& config : family) cells.push_back(evaluate_config(corpus, config, backend, options));
  }
  return build_report(grid);
}

}  // namespace blanc
