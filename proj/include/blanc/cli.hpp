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

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "blanc/backend.hpp"
#include "blanc/remote_backend.hpp"

namespace blanc::cli {

inline constexpr const char* kToolVersion = "0.3.0";

// Everything needed to reproduce a run. Reports embed core_json(), which
// leaves out wall-clock timestamps so that identical runs produce identical
// report files; manifest.json carries the full form.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::vector<std::pair<std::string, std::string>> config_hashes;  // label, hash
  std::string backend_identity;
  nlohmann::json backend_settings = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> corpus_ids;
  std::string started_at;
  std::string finished_at;
  std::string tool_version = kToolVersion;

  nlohmann::json core_json() const;
  nlohmann::json to_json() const;
};

std::string utc_timestamp();

// Backend construction from a --backend value: "reference" or
// "remote:<base-url>". Tests replace it to observe backend traffic.
using BackendFactory =
    std::function<std::unique_ptr<ModelBackend>(const std::string& spec, const RemoteBackendOptions&)>;

std::unique_ptr<ModelBackend> make_backend(const std::string& spec, const RemoteBackendOptions& remote);

// Settings echoed into the manifest for a backend spec.
nlohmann::json backend_settings(const std::string& spec, const RemoteBackendOptions& remote);

struct Environment {
  BackendFactory backend_factory = make_backend;
};

// Entry point shared by the blanc tool and the tests. args excludes the
// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace blanc::cli
