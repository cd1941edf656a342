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

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "blanc/engine.hpp"

namespace blanc {

struct CacheKey {
  std::string corpus_id;
  std::string sample_id;
  std::string config_hash;
  std::string backend_identity;
};

// Outcome of scoring one sample: a result, or the reason it was skipped.
struct SampleOutcome {
  std::string sample_id;
  std::optional<BlancResult> result;
  std::string skip_reason;

  bool skipped() const { return !result.has_value(); }
};

nlohmann::json outcome_to_json(const SampleOutcome& outcome);
SampleOutcome outcome_from_json(const nlohmann::json& j);

// On-disk cache of per-sample outcomes. One JSONL file per
// (corpus, config hash, backend identity); each line is one sample outcome.
// Files are loaded lazily and appended to; safe for concurrent use.
class ScoreCache {
 public:
  explicit ScoreCache(std::filesystem::path directory);

  std::optional<SampleOutcome> get(const CacheKey& key);
  void put(const CacheKey& key, const SampleOutcome& outcome);

  const std::filesystem::path& directory() const { return directory_; }

 private:
  using Shard = std::map<std::string, SampleOutcome>;
  std::filesystem::path shard_path(const CacheKey& key) const;
  Shard& shard(const CacheKey& key);

  std::filesystem::path directory_;
  std::mutex mutex_;
  std::map<std::string, Shard> shards_;
};

}  // namespace blanc
