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

#include "blanc/score_cache.hpp"

#include <cstdio>
#include <fstream>

#include "blanc/error.hpp"
#include "blanc/random.hpp"

namespace blanc {

using nlohmann::json;

namespace {

json matrix_json(const CountMatrix& m) { return json::array({m.k00, m.k01, m.k10, m.k11}); }

CountMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("count matrix must have 4 entries");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
          j[3].get<std::int64_t>()};
}

}  // namespace

json outcome_to_json(const SampleOutcome& outcome) {
  json j = {{"sample_id", outcome.sample_id}};
  if (!outcome.result) {
    j["skipped"] = outcome.skip_reason;
    return j;
  }
  const BlancResult& r = *outcome.result;
  j["score"] = r.score;
  j["counts"] = matrix_json(r.counts);
  json sentences = json::array();
  for (const auto& m : r.per_sentence) sentences.push_back(matrix_json(m));
  j["per_sentence"] = sentences;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

SampleOutcome outcome_from_json(const json& j) {
  SampleOutcome o;
  o.sample_id = j.at("sample_id").get<std::string>();
  if (j.contains("skipped")) {
    o.skip_reason = j["skipped"].get<std::string>();
    return o;
  }
  std::vector<CountMatrix> per_sentence;
  for (const auto& m : j.at("per_sentence")) per_sentence.push_back(matrix_from_json(m));
  BlancResult r = pool_sentences(std::move(per_sentence));
  if (r.counts != matrix_from_json(j.at("counts")))
    throw std::invalid_argument("sample " + o.sample_id + ": counts disagree with per-sentence matrices");
  if (j.contains("warnings")) r.warnings = j["warnings"].get<std::vector<std::string>>();
  o.result = std::move(r);
  return o;
}

ScoreCache::ScoreCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::filesystem::path ScoreCache::shard_path(const CacheKey& key) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(key.backend_identity + '\n' + key.corpus_id)));
  return directory_ / (std::string(buf) + "-" + key.config_hash + ".jsonl");
}

ScoreCache::Shard& ScoreCache::shard(const CacheKey& key) {
  const auto path = shard_path(key);
  auto [it, inserted] = shards_.try_emplace(path.string());
  if (!inserted) return it->second;
  std::ifstream in(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      SampleOutcome o = outcome_from_json(json::parse(line));
      it->second[o.sample_id] = std::move(o);
    } catch (const std::exception& e) {
      // A torn final line from an interrupted run is dropped; the sample is rescored.
      if (in.peek() != EOF) throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return it->second;
}

std::optional<SampleOutcome> ScoreCache::get(const CacheKey& key) {
  std::lock_guard lock(mutex_);
  auto& s = shard(key);
  auto it = s.find(key.sample_id);
  if (it == s.end()) return std::nullopt;
  return it->second;
}

void ScoreCache::put(const CacheKey& key, const SampleOutcome& outcome) {
  std::lock_guard lock(mutex_);
  auto& s = shard(key);
  s[key.sample_id] = outcome;
  std::ofstream out(shard_path(key), std::ios::app);
  if (!out) throw Error("cannot write score cache in " + directory_.string());
  out << outcome_to_json(outcome).dump() << '\n';
}

}  // namespace blanc
