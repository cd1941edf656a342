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

#include <chrono>
#include <ctime>

#include "blanc/cli.hpp"
#include "blanc/error.hpp"
#include "blanc/reference_backend.hpp"

namespace blanc::cli {

using nlohmann::json;

json RunManifest::core_json() const {
  json hashes = json::array();
  for (const auto& [label, hash] : config_hashes) hashes.push_back({{"label", label}, {"hash", hash}});
  return {{"command", command},
          {"arguments", arguments},
          {"config_hashes", hashes},
          {"backend", {{"identity", backend_identity}, {"settings", backend_settings}}},
          {"seed", seed},
          {"corpora", corpus_ids},
          {"tool_version", tool_version},
          {"conventions",
           {{"help_context", "summary + [SEP] + sentence; base uses one filler symbol per summary token"},
            {"tune_context", "none"},
            {"mask_passes", "per sentence, offsets 0..gap-1, candidate iff (j - offset) mod gap < gap_mask"},
            {"score", "pooled counts: (k01 - k10) / N"},
            {"p_values", "two-sided, Student t with n - 2 degrees of freedom"}}}};
}

json RunManifest::to_json() const {
  json j = core_json();
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::unique_ptr<ModelBackend> make_backend(const std::string& spec, const RemoteBackendOptions& remote) {
  if (spec == "reference") return std::make_unique<ReferenceBackend>();
  if (spec.starts_with("remote:")) return std::make_unique<RemoteBackend>(spec.substr(7), remote);
  throw ConfigError("unknown backend \"" + spec + "\"; expected \"reference\" or \"remote:<base-url>\"");
}

json backend_settings(const std::string& spec, const RemoteBackendOptions& remote) {
  json j = {{"spec", spec}};
  if (spec.starts_with("remote:")) {
    j["tune_epochs"] = remote.tune_epochs;
    j["learning_rate"] = remote.learning_rate;
    j["timeout_seconds"] = remote.timeout_seconds;
  }
  return j;
}

}  // namespace blanc::cli
