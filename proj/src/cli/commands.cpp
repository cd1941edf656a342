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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "blanc/cli.hpp"
#include "blanc/corpus.hpp"
#include "blanc/error.hpp"
#include "blanc/parallel.hpp"
#include "blanc/restriction.hpp"
#include "blanc/score_cache.hpp"
#include "blanc/stats.hpp"
#include "blanc/sweep.hpp"

namespace blanc::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string backend = "reference";
  std::uint64_t seed = 0;
  int workers = default_workers();
  std::string out_dir = ".";
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "jsonl";
  RemoteBackendOptions remote;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_backend) {
  if (with_backend) {
    cmd->add_option("--backend", o.backend, "\"reference\" or \"remote:<base-url>\"")->capture_default_str();
    cmd->add_option("--workers", o.workers, "Concurrent samples in flight")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", o.cache_dir, "Per-sample score cache (default: <out-dir>/cache)");
    cmd->add_flag("--no-cache", o.no_cache, "Do not read or write the score cache");
    cmd->add_option("--tune-epochs", o.remote.tune_epochs, "Remote tuning epochs")->capture_default_str();
    cmd->add_option("--learning-rate", o.remote.learning_rate, "Remote tuning learning rate")->capture_default_str();
  }
  cmd->add_option("--seed", o.seed, "Seed for every random choice (tuning masks, sampling)")->capture_default_str();
  cmd->add_option("--out-dir", o.out_dir, "Directory for reports")->capture_default_str();
  cmd->add_option("--format", o.format, "Corpus format: jsonl or summeval")->capture_default_str();
}

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

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Loads configs and pins every tuning seed to --seed.
std::vector<MeasureConfig> configs_with_seed(const std::string& source, std::uint64_t seed) {
  auto configs = load_configs(source);
  for (auto& c : configs)
    if (c.tuning) c.tuning->seed = seed;
  return configs;
}

void check_capabilities(const std::vector<MeasureConfig>& configs, const ModelBackend& backend) {
  for (const auto& c : configs)
    if (c.family == Family::Tune && !backend.capabilities().tune)
      throw CapabilityError("config \"" + c.label + "\" needs tuning, but backend " + backend.identity() +
                            " does not support it");
}

class Run {
 public:
  Run(std::string command, const std::vector<std::string>& args, const CommonOptions& common)
      : common_(common) {
    manifest_.command = std::move(command);
    manifest_.arguments = args;
    manifest_.seed = common.seed;
    manifest_.started_at = utc_timestamp();
    fs::create_directories(common.out_dir);
  }

  RunManifest& manifest() { return manifest_; }
  fs::path out(const std::string& name) const { return fs::path(common_.out_dir) / name; }

  std::unique_ptr<ModelBackend> backend(const Environment& env) {
    auto b = env.backend_factory(common_.backend, common_.remote);
    manifest_.backend_identity = b->identity();
    manifest_.backend_settings = backend_settings(common_.backend, common_.remote);
    return b;
  }

  std::unique_ptr<ScoreCache> cache() const {
    if (common_.no_cache) return nullptr;
    return std::make_unique<ScoreCache>(common_.cache_dir.empty() ? out("cache") : fs::path(common_.cache_dir));
  }

  void add_configs(const std::vector<MeasureConfig>& configs) {
    for (const auto& c : configs) manifest_.config_hashes.emplace_back(c.label, c.hash());
  }

  void finish() {
    manifest_.finished_at = utc_timestamp();
    write_file(out("manifest.json"), manifest_.to_json().dump(2) + "\n");
  }

 private:
  CommonOptions common_;
  RunManifest manifest_;
};

json score_record(const std::string& corpus_id, const MeasureConfig& config, const SampleOutcome& o) {
  json j = outcome_to_json(o);
  j["corpus"] = corpus_id;
  j["config"] = config.label;
  j["config_hash"] = config.hash();
  return j;
}

void append_scores(const ConfigEvaluation& ev, std::string& jsonl, std::string& csv) {
  for (const auto& s : ev.samples) {
    jsonl += score_record(ev.corpus_id, ev.config, s).dump() + "\n";
    csv += csv_field(ev.corpus_id) + "," + csv_field(ev.config.label) + "," + csv_field(s.sample_id) + ",";
    if (s.result) {
      const auto& c = s.result->counts;
      csv += num(s.result->score) + "," + std::to_string(c.k00) + "," + std::to_string(c.k01) + "," +
             std::to_string(c.k10) + "," + std::to_string(c.k11) + ",\n";
    } else {
      csv += "nan,0,0,0,0," + csv_field(s.skip_reason) + "\n";
    }
  }
}

const char* kScoresCsvHeader = "corpus,config,sample_id,score,k00,k01,k10,k11,skipped\n";

// ---- score ----------------------------------------------------------------

struct ScoreArgs {
  CommonOptions common;
  std::string corpus;
  std::string config;
};

int cmd_score(const ScoreArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
              const Environment& env) {
  const Corpus corpus = load_corpus(a.corpus, corpus_format_from_string(a.common.format));
  const auto configs = configs_with_seed(a.config, a.common.seed);
  Run run("score", args, a.common);
  auto backend = run.backend(env);
  check_capabilities(configs, *backend);
  run.add_configs(configs);
  run.manifest().corpus_ids = {corpus.id};
  auto cache = run.cache();
  const SweepOptions options{cache.get(), a.common.workers};

  std::string jsonl, csv = kScoresCsvHeader;
  json summary = json::array();
  for (const auto& config : configs) {
    const ConfigEvaluation ev = evaluate_config(corpus, config, *backend, options);
    append_scores(ev, jsonl, csv);
    summary.push_back({{"config", config.label},
                       {"config_hash", config.hash()},
                       {"mean", ev.mean},
                       {"stderr", ev.standard_error},
                       {"n", ev.n},
                       {"skipped", ev.skipped_ids()}});
    out << config.label << ": mean " << num(ev.mean) << " stderr " << num(ev.standard_error) << " n " << ev.n
        << "\n";
    for (const auto& id : ev.skipped_ids()) err << "warning: " << config.label << ": skipped sample " << id << "\n";
  }
  write_file(run.out("scores.jsonl"), jsonl);
  write_file(run.out("scores.csv"), csv);
  write_file(run.out("score_report.json"),
             json{{"manifest", run.manifest().core_json()}, {"configs", summary}}.dump(2) + "\n");
  run.finish();
  return 0;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  CommonOptions common;
  std::vector<std::string> corpora;
  std::string family;
  std::string from_scores;
};

std::map<std::tuple<std::string, std::string, std::string>, SampleOutcome> read_score_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scores file: " + path);
  std::map<std::tuple<std::string, std::string, std::string>, SampleOutcome> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      SampleOutcome o = outcome_from_json(j);
      out[{j.at("corpus").get<std::string>(), j.at("config_hash").get<std::string>(), o.sample_id}] = std::move(o);
    } catch (const std::exception& e) {
      throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void print_report(const SweepReport& report, std::ostream& out) {
  for (const auto& o : report.optima) out << o.corpus_id << ": optimal \"" << o.label << "\"\n";
  out << "universal: " << (report.universal ? "yes" : "no") << "\n";
}

int cmd_sweep(const SweepArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
              const Environment& env) {
  const auto format = corpus_format_from_string(a.common.format);
  std::vector<Corpus> corpora;
  std::set<std::string> ids;
  for (const auto& path : a.corpora) {
    corpora.push_back(load_corpus(path, format));
    if (!ids.insert(corpora.back().id).second)
      throw CorpusError("two corpora share the id \"" + corpora.back().id + "\" (file stem)");
  }
  const auto family = configs_with_seed(a.family, a.common.seed);
  Run run("sweep", args, a.common);
  run.add_configs(family);
  for (const auto& c : corpora) run.manifest().corpus_ids.push_back(c.id);

  std::vector<std::vector<ConfigEvaluation>> grid;
  std::string jsonl, csv = kScoresCsvHeader;
  if (!a.from_scores.empty()) {
    // Rebuild from a persisted score matrix; no backend involved.
    const auto matrix = read_score_matrix(a.from_scores);
    run.manifest().backend_identity = "none (from " + a.from_scores + ")";
    for (const auto& corpus : corpora) {
      auto& cells = grid.emplace_back();
      for (const auto& config : family) {
        ConfigEvaluation ev;
        ev.corpus_id = corpus.id;
        ev.config = config;
        for (const auto& s : corpus.samples) {
          auto it = matrix.find({corpus.id, config.hash(), s.sample_id});
          if (it == matrix.end())
            throw Error("scores file has no entry for " + corpus.id + " / " + config.label + " / " + s.sample_id);
          ev.samples.push_back(it->second);
        }
        summarize(ev);
        cells.push_back(std::move(ev));
      }
    }
  } else {
    auto backend = run.backend(env);
    check_capabilities(family, *backend);
    auto cache = run.cache();
    const SweepOptions options{cache.get(), a.common.workers};
    for (const auto& corpus : corpora) {
      auto& cells = grid.emplace_back();
      for (const auto& config : family) cells.push_back(evaluate_config(corpus, config, *backend, options));
    }
  }
  for (const auto& cells : grid)
    for (const auto& ev : cells) append_scores(ev, jsonl, csv);

  const SweepReport report = build_report(grid);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  write_file(run.out("sweep.csv"), report.to_csv());
  json j = report.to_json();
  j["manifest"] = run.manifest().core_json();
  write_file(run.out("sweep.json"), j.dump(2) + "\n");
  if (a.from_scores.empty()) {
    write_file(run.out("scores.jsonl"), jsonl);
    write_file(run.out("scores.csv"), csv);
  }
  print_report(report, out);
  run.finish();
  return 0;
}

// ---- restrict -------------------------------------------------------------

struct RestrictArgs {
  CommonOptions common;
  std::string corpus;
  std::string config;
  std::string strategies = "full;top:1,2,3,4,5;contiguous:1,2,3,4,5;threshold:0,0.05,0.1,0.2";
  std::string aggregation = "both";
  std::string groups = "expert";
};

int cmd_restrict(const RestrictArgs& a, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err, const Environment& env) {
  const Corpus corpus = load_corpus(a.corpus, corpus_format_from_string(a.common.format));
  const auto groups = split_list(a.groups);
  if (groups.empty()) throw ConfigError("--groups is empty");
  for (const auto& g : groups)
    if (!corpus.has_group(g)) throw CorpusError("corpus \"" + corpus.id + "\" has no human scores for group \"" + g + "\"");

  std::vector<Aggregation> aggregations;
  if (a.aggregation == "combined" || a.aggregation == "both") aggregations.push_back(Aggregation::RecomputeCombined);
  if (a.aggregation == "average" || a.aggregation == "both") aggregations.push_back(Aggregation::AverageOfSentences);
  if (aggregations.empty()) throw ConfigError("--aggregation must be combined, average or both");
  std::vector<RestrictionSpec> specs;
  for (auto agg : aggregations) {
    auto s = parse_strategies(a.strategies, agg);
    specs.insert(specs.end(), s.begin(), s.end());
  }

  const auto configs = configs_with_seed(a.config, a.common.seed);
  if (configs.size() != 1) throw ConfigError("restrict takes exactly one configuration, got " + std::to_string(configs.size()));
  Run run("restrict", args, a.common);
  auto backend = run.backend(env);
  check_capabilities(configs, *backend);
  run.add_configs(configs);
  run.manifest().corpus_ids = {corpus.id};
  auto cache = run.cache();
  const ConfigEvaluation ev = evaluate_config(corpus, configs.front(), *backend, {cache.get(), a.common.workers});

  // Samples with a result and at least one sentence.
  Corpus aligned;
  aligned.id = corpus.id;
  std::vector<const BlancResult*> results;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    const auto& o = ev.samples[i];
    if (o.skipped() || o.result->per_sentence.empty()) {
      err << "warning: sample " << o.sample_id << " excluded (" << (o.skipped() ? o.skip_reason : "no sentences") << ")\n";
      continue;
    }
    aligned.samples.push_back(corpus.samples[i]);
    results.push_back(&*o.result);
  }
  std::vector<double> full;
  for (const auto* r : results) full.push_back(r->score);

  json summary = json::object();
  for (const auto& group : groups) {
    const auto human = group_means(aligned, group);
    if (human.empty()) throw CorpusError("no quality is scored by group \"" + group + "\" on every sample");
    std::vector<GainCurvePoint> points;
    for (const auto& spec : specs) {
      std::vector<double> restricted;
      std::size_t fallbacks = 0;
      for (const auto* r : results) {
        const auto sentence_scores = per_sentence_blanc(*r);
        const Selection sel = select(spec, sentence_scores);
        fallbacks += sel.fallback ? 1 : 0;
        restricted.push_back(restricted_blanc(*r, sel.indices, spec.aggregation));
      }
      for (auto& g : correlation_gain(full, restricted, human)) {
        if (!g.factor) err << "warning: " << group << "/" << g.quality << "/" << spec.label() << ": factor undefined\n";
        if (g.sign_flip) err << "warning: " << group << "/" << g.quality << "/" << spec.label() << ": correlation changes sign\n";
        points.push_back({spec, std::move(g), fallbacks});
      }
    }
    write_file(run.out("restrict_" + group + ".csv"), gain_curves_csv(points));
    summary[group] = points.size();
    out << group << ": " << points.size() << " curve points over " << results.size() << " samples\n";
  }
  write_file(run.out("restrict.json"),
             json{{"manifest", run.manifest().core_json()}, {"points", summary}}.dump(2) + "\n");
  run.finish();
  return 0;
}

// ---- correlate ------------------------------------------------------------

struct CorrelateArgs {
  CommonOptions common;
  std::vector<std::string> scores;
  std::string corpus;
  std::string groups = "expert,turker";
};

int cmd_correlate(const CorrelateArgs& a, const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  const Corpus corpus = load_corpus(a.corpus, corpus_format_from_string(a.common.format));
  const auto groups = split_list(a.groups);
  if (groups.empty()) throw ConfigError("--groups is empty");

  // measure label -> sample id -> score, labels in order of first appearance
  std::vector<std::string> labels;
  std::map<std::string, std::map<std::string, std::optional<double>>> by_label;
  for (const auto& path : a.scores) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scores file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        const json j = json::parse(line);
        const auto label = j.at("config").get<std::string>();
        if (!by_label.contains(label)) labels.push_back(label);
        const auto id = j.at("sample_id").get<std::string>();
        by_label[label][id] = j.contains("skipped") ? std::nullopt : std::optional<double>(j.at("score").get<double>());
      } catch (const std::exception& e) {
        throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (labels.empty()) throw Error("no scores given");

  Corpus aligned;
  aligned.id = corpus.id;
  std::vector<stats::NamedScores> measures(labels.size());
  for (std::size_t m = 0; m < labels.size(); ++m) measures[m].label = labels[m];
  for (const auto& s : corpus.samples) {
    bool ok = true;
    for (const auto& label : labels) {
      auto it = by_label[label].find(s.sample_id);
      ok = ok && it != by_label[label].end() && it->second.has_value();
    }
    if (!ok) {
      err << "warning: sample " << s.sample_id << " lacks a score for some measure; excluded\n";
      continue;
    }
    aligned.samples.push_back(s);
    for (std::size_t m = 0; m < labels.size(); ++m) measures[m].values.push_back(*by_label[labels[m]][s.sample_id]);
  }

  Run run("correlate", args, a.common);
  run.manifest().corpus_ids = {corpus.id};
  run.manifest().backend_identity = "none";
  json report = {{"tables", json::object()}};
  std::map<std::string, stats::HumanScores> human;
  for (const auto& group : groups) {
    if (!aligned.has_group(group)) {
      err << "warning: corpus has no scores for group \"" << group << "\"; table omitted\n";
      continue;
    }
    human[group] = group_means(aligned, group);
    const auto table = stats::correlation_table(measures, human[group]);
    for (const auto& w : table.warnings) err << "warning: " << group << ": " << w << "\n";
    write_file(run.out("correlation_" + group + ".csv"), table.to_csv());
    write_file(run.out("correlation_" + group + ".txt"), table.to_text());
    out << "[" << group << "]\n" << table.to_text();
    report["tables"][group] = table.to_csv();
  }
  if (human.empty()) throw CorpusError("corpus has human scores for none of the groups " + a.groups);

  if (!human.contains("expert") || !human.contains("turker")) {
    err << "warning: shift report needs both expert and turker scores; omitted\n";
  } else if (measures.size() < 2) {
    err << "warning: shift report needs two measures; omitted\n";
  } else {
    const auto shift = stats::expert_turker_shift(measures[0].values, measures[1].values, human["expert"], human["turker"]);
    for (const auto& w : shift.warnings) err << "warning: shift: " << w << "\n";
    write_file(run.out("shift.csv"), shift.to_csv());
    report["shift"] = {{"from", measures[0].label}, {"to", measures[1].label}, {"csv", shift.to_csv()}};
  }
  report["manifest"] = run.manifest().core_json();
  write_file(run.out("correlate.json"), report.dump(2) + "\n");
  run.finish();
  return 0;
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  CommonOptions common;
  std::string documents;
  std::string kind = "top";
  int k = 2;
  int per_day = 0;
  std::string output;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  std::ifstream in(a.documents);
  if (!in) throw CorpusError("cannot open documents file: " + a.documents);
  std::vector<DatedDocument> docs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      docs.push_back({j.at("id").get<std::string>(), j.value("date", ""), j.at("text").get<std::string>()});
    } catch (const std::exception& e) {
      throw CorpusError(a.documents + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (a.per_day > 0) docs = sample_per_day(docs, a.per_day, a.common.seed);
  SynthSummary kind;
  if (a.kind == "top")
    kind = SynthSummary::TopSentences;
  else if (a.kind == "random")
    kind = SynthSummary::RandomSentences;
  else
    throw ConfigError("--kind must be top or random");
  const std::string id = fs::path(a.output).stem().string();
  const Corpus corpus = synthesize_corpus(docs, kind, a.k, a.common.seed, id);
  std::ofstream o(a.output, std::ios::binary);
  if (!o) throw Error("cannot write " + a.output);
  write_corpus(corpus, o);
  out << "wrote " << corpus.samples.size() << " samples to " << a.output << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Reference-free summary evaluation with BLANC-help and BLANC-tune", "blanc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score every sample of a corpus under one or more configs");
  score_cmd->add_option("--corpus", score.corpus, "Corpus file")->required();
  score_cmd->add_option("--config", score.config, "Config file or builtin:<name>")->required();
  add_common(score_cmd, score.common, true);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a measure family over corpora and pick the max-help config");
  sweep_cmd->add_option("--corpus", sweep.corpora, "Corpus file (repeatable)")->required();
  sweep_cmd->add_option("--family", sweep.family, "Family file or builtin:<name>")->required();
  sweep_cmd->add_option("--from-scores", sweep.from_scores, "Rebuild the report from a scores.jsonl instead of scoring");
  add_common(sweep_cmd, sweep.common, true);

  RestrictArgs restrict;
  auto* restrict_cmd = app.add_subcommand("restrict", "Correlation gain when only part of the text is scored");
  restrict_cmd->add_option("--corpus", restrict.corpus, "Corpus with human scores")->required();
  restrict_cmd->add_option("--config", restrict.config, "Config file or builtin:<name> (one config)")->required();
  restrict_cmd->add_option("--strategies", restrict.strategies, "e.g. full;top:1,2,3;contiguous:1,2;threshold:0,0.1")
      ->capture_default_str();
  restrict_cmd->add_option("--aggregation", restrict.aggregation, "combined, average or both")->capture_default_str();
  restrict_cmd->add_option("--groups", restrict.groups, "Annotator groups, comma separated")->capture_default_str();
  add_common(restrict_cmd, restrict.common, true);

  CorrelateArgs correlate;
  auto* correlate_cmd = app.add_subcommand("correlate", "Correlate scored measures with human scores");
  correlate_cmd->add_option("--scores", correlate.scores, "scores.jsonl from score or sweep (repeatable)")->required();
  correlate_cmd->add_option("--corpus", correlate.corpus, "Corpus with human scores")->required();
  correlate_cmd->add_option("--groups", correlate.groups, "Annotator groups, comma separated")->capture_default_str();
  add_common(correlate_cmd, correlate.common, false);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Build a corpus with synthetic top-k or random-k sentence summaries");
  synth_cmd->add_option("--documents", synth.documents, "JSONL with id, date and text")->required();
  synth_cmd->add_option("--kind", synth.kind, "top or random")->capture_default_str();
  synth_cmd->add_option("--k", synth.k, "Sentences per summary")->capture_default_str();
  synth_cmd->add_option("--per-day", synth.per_day, "Documents sampled per day (0: all)")->capture_default_str();
  synth_cmd->add_option("--out", synth.output, "Output corpus file")->required();
  synth_cmd->add_option("--seed", synth.common.seed, "Seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (score_cmd->parsed()) return cmd_score(score, args, out, err, env);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, args, out, err, env);
    if (restrict_cmd->parsed()) return cmd_restrict(restrict, args, out, err, env);
    if (correlate_cmd->parsed()) return cmd_correlate(correlate, args, out, err);
    if (synth_cmd->parsed()) return cmd_synth(synth, out);
  } catch (const CapabilityError& e) {
    err << "error: capability: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace blanc::cli
