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

#include "blanc/remote_backend.hpp"

#include <httplib.h>

#include "blanc/error.hpp"
#include "blanc/wire.hpp"

namespace blanc {

using nlohmann::json;

namespace {

json parse_body(const std::string& body, const std::string& what) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw BackendError("malformed " + what + " response: " + e.what());
  }
}

}  // namespace

RemoteBackend::RemoteBackend(std::string base_url, RemoteBackendOptions options)
    : base_url_(std::move(base_url)), options_(options) {
  const auto scheme_end = base_url_.find("://");
  if (scheme_end == std::string::npos)
    throw BackendError("remote backend URL must start with http://, got \"" + base_url_ + "\"");
  const auto path_start = base_url_.find('/', scheme_end + 3);
  scheme_host_port_ = base_url_.substr(0, path_start);
  if (path_start != std::string::npos) path_prefix_ = base_url_.substr(path_start);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();

  const json health = parse_body(request("GET", "/healthz", "", 200), "/healthz");
  try {
    model_ = health.at("model").get<std::string>();
    max_input_length_ = health.at("max_input_length").get<int>();
    ids_ = wire::special_ids_from_json(health.at("special_ids"));
    tune_ = health.contains("capabilities") && health["capabilities"].value("tune", false);
  } catch (const std::exception& e) {
    throw BackendError(std::string("unusable /healthz response: ") + e.what());
  }
  if (max_input_length_ < 2) throw BackendError("sidecar reports max_input_length < 2");
}

std::string RemoteBackend::identity() const { return "remote/" + model_ + "@" + base_url_; }

Capabilities RemoteBackend::capabilities() const {
  Capabilities c;
  c.tune = tune_;
  return c;
}

std::string RemoteBackend::request(const std::string& method, const std::string& path,
                                   const std::string& body, int expected_status) const {
  // One client per request: httplib clients are not safe for concurrent use.
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(10);
  client.set_read_timeout(options_.timeout_seconds);
  client.set_write_timeout(options_.timeout_seconds);
  const std::string full_path = path_prefix_ + path;

  httplib::Result res;
  if (method == "GET")
    res = client.Get(full_path);
  else if (method == "POST")
    res = client.Post(full_path, body, "application/json");
  else if (method == "DELETE")
    res = client.Delete(full_path);
  else
    throw std::logic_error("unsupported method " + method);

  if (!res)
    throw BackendError("cannot reach sidecar at " + base_url_ + " (" + method + " " + path +
                       "): " + httplib::to_string(res.error()));
  if (res->status == expected_status) return res->body;

  const std::string detail = method + " " + path + " returned " + std::to_string(res->status) +
                             (res->body.empty() ? "" : ": " + res->body);
  if (res->status == 413) throw InputTooLongError("sidecar " + detail);
  throw BackendError("sidecar " + detail);
}

std::vector<Sentence> RemoteBackend::tokenize(std::span<const std::string> texts) {
  const json req = {{"texts", std::vector<std::string>(texts.begin(), texts.end())}};
  const json res = parse_body(request("POST", "/tokenize", req.dump(), 200), "/tokenize");
  std::vector<Sentence> out;
  try {
    for (const auto& s : res.at("tokens")) out.push_back(wire::sentence_from_json(s));
  } catch (const std::exception& e) {
    throw BackendError(std::string("malformed /tokenize response: ") + e.what());
  }
  if (out.size() != texts.size()) throw BackendError("/tokenize returned the wrong number of lists");
  return out;
}

Predictions RemoteBackend::predict(std::span<const MaskedInstance> batch,
                                   const ModelSession* session) {
  if (batch.empty()) return {};
  json req = {{"instances", json::array()}};
  for (const auto& inst : batch) {
    inst.validate();
    req["instances"].push_back(wire::to_json(inst));
  }
  if (session) req["session_id"] = session->session_id;
  const json res = parse_body(request("POST", "/predict", req.dump(), 200), "/predict");

  Predictions out;
  try {
    out = res.at("predictions").get<Predictions>();
  } catch (const std::exception& e) {
    throw BackendError(std::string("malformed /predict response: ") + e.what());
  }
  if (out.size() != batch.size()) throw BackendError("/predict returned the wrong number of lists");
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() != batch[i].masked_positions.size())
      throw BackendError("/predict returned the wrong number of predictions for instance " +
                         std::to_string(i));
  return out;
}

ModelSession RemoteBackend::spawn_tuned(const TokenizedText& summary, const TuningPolicy& policy) {
  if (!tune_) throw CapabilityError("sidecar at " + base_url_ + " does not support tuning");
  policy.validate();
  json sentences = json::array();
  for (const auto& s : summary.sentences) sentences.push_back(wire::to_json(s));
  const json req = {{"summary_tokens", sentences},
                    {"tuning", wire::to_json(policy)},
                    {"epochs", options_.tune_epochs},
                    {"learning_rate", options_.learning_rate}};
  const json res = parse_body(request("POST", "/sessions", req.dump(), 200), "/sessions");
  ModelSession session;
  try {
    session.session_id = res.at("session_id").get<std::string>();
  } catch (const std::exception& e) {
    throw BackendError(std::string("malformed /sessions response: ") + e.what());
  }
  session.base_identity = identity();
  session.tuned_on = fingerprint(summary);
  return session;
}

void RemoteBackend::release(const ModelSession& session) {
  request("DELETE", "/sessions/" + session.session_id, "", 204);
}

}  // namespace blanc
