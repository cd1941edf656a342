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

#include <string>

#include "blanc/backend.hpp"

namespace blanc {

// Sidecar settings that are not part of the measure itself. They are echoed
// in every run manifest.
struct RemoteBackendOptions {
  int tune_epochs = 3;
  double learning_rate = 5e-5;
  int timeout_seconds = 300;
};

// Client for the masked-LM sidecar (JSON over HTTP):
//
//   GET    /healthz        -> {status, model, max_input_length, special_ids, capabilities: {tune}}
//   POST   /tokenize       {texts}                       -> {tokens: [[Token]]}
//   POST   /predict        {session_id?, instances}      -> {predictions: [[vocab_id]]}
//   POST   /sessions       {summary_tokens, tuning, epochs, learning_rate} -> {session_id}
//   DELETE /sessions/{id}  -> 204
//
// The constructor performs the /healthz handshake and throws BackendError if
// the service is unreachable or reports an unusable configuration.
class RemoteBackend : public ModelBackend {
 public:
  explicit RemoteBackend(std::string base_url, RemoteBackendOptions options = {});

  std::string identity() const override;
  Capabilities capabilities() const override;
  SpecialIds special_ids() const override { return ids_; }
  int max_input_length() const override { return max_input_length_; }

  std::vector<Sentence> tokenize(std::span<const std::string> texts) override;
  Predictions predict(std::span<const MaskedInstance> batch,
                      const ModelSession* session = nullptr) override;
  ModelSession spawn_tuned(const TokenizedText& summary, const TuningPolicy& policy) override;
  void release(const ModelSession& session) override;

  const std::string& base_url() const { return base_url_; }
  const std::string& model() const { return model_; }
  const RemoteBackendOptions& options() const { return options_; }

 private:
  std::string request(const std::string& method, const std::string& path,
                      const std::string& body, int expected_status) const;

  std::string base_url_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  RemoteBackendOptions options_;
  std::string model_;
  int max_input_length_ = 0;
  SpecialIds ids_;
  bool tune_ = false;
};

}  // namespace blanc
