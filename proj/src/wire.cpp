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

#include "blanc/wire.hpp"

#include "blanc/error.hpp"

namespace blanc::wire {

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field \"") + name + "\" has the wrong type");
  }
}

}  // namespace

json to_json(const Token& token) {
  return {{"surface", token.surface},
          {"char_len", token.char_len},
          {"kind", std::string(blanc::to_string(token.kind))},
          {"vocab_id", token.vocab_id}};
}

Token token_from_json(const json& j) {
  Token t = make_token(field<std::string>(j, "surface"),
                       token_kind_from_string(field<std::string>(j, "kind")),
                       field<VocabId>(j, "vocab_id"));
  if (j.contains("char_len") && field<int>(j, "char_len") != t.char_len)
    throw std::invalid_argument("char_len does not match surface \"" + t.surface + "\"");
  return t;
}

json to_json(const Sentence& sentence) {
  json arr = json::array();
  for (const auto& t : sentence) arr.push_back(to_json(t));
  return arr;
}

Sentence sentence_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("token list must be an array");
  Sentence s;
  s.reserve(j.size());
  for (const auto& t : j) s.push_back(token_from_json(t));
  return s;
}

json to_json(const MaskedInstance& instance, bool include_targets) {
  json j = {{"input_ids", instance.input_ids},
            {"masked_positions", instance.masked_positions},
            {"context_len", instance.context_len}};
  if (include_targets) j["targets"] = instance.targets;
  return j;
}

MaskedInstance instance_from_json(const json& j) {
  MaskedInstance inst;
  inst.input_ids = field<std::vector<VocabId>>(j, "input_ids");
  inst.masked_positions = field<std::vector<int>>(j, "masked_positions");
  inst.context_len = j.contains("context_len") ? field<int>(j, "context_len") : 0;
  if (j.contains("targets"))
    inst.targets = field<std::vector<VocabId>>(j, "targets");
  else
    inst.targets.assign(inst.masked_positions.size(), 0);
  inst.validate();
  return inst;
}

std::string_view to_string(TuningMode mode) { return mode == TuningMode::Even ? "even" : "random"; }

TuningMode tuning_mode_from_string(std::string_view name) {
  if (name == "even") return TuningMode::Even;
  if (name == "random") return TuningMode::Random;
  throw ConfigError("unknown tuning mode: " + std::string(name));
}

json to_json(const TuningPolicy& p) {
  return {{"gap_tune", p.gap_tune},   {"gap_mask_tune", p.gap_mask_tune},
          {"mode", std::string(to_string(p.mode))},
          {"seed", p.seed},           {"p_replace", p.p_replace},
          {"p_keep", p.p_keep},       {"l_normal", p.min_len.normal},
          {"l_lead", p.min_len.lead}, {"l_follow", p.min_len.follow}};
}

TuningPolicy tuning_from_json(const json& j) {
  TuningPolicy p;
  p.gap_tune = field<int>(j, "gap_tune");
  p.gap_mask_tune = field<int>(j, "gap_mask_tune");
  p.mode = tuning_mode_from_string(field<std::string>(j, "mode"));
  p.seed = field<std::uint64_t>(j, "seed");
  p.p_replace = field<double>(j, "p_replace");
  p.p_keep = field<double>(j, "p_keep");
  p.min_len = {field<int>(j, "l_normal"), field<int>(j, "l_lead"), field<int>(j, "l_follow")};
  p.validate();
  return p;
}

json to_json(const MaskingPolicy& p) {
  return {{"gap", p.gap},
          {"gap_mask", p.gap_mask},
          {"l_normal", p.min_len.normal},
          {"l_lead", p.min_len.lead},
          {"l_follow", p.min_len.follow}};
}

MaskingPolicy masking_from_json(const json& j) {
  MaskingPolicy p;
  p.gap = field<int>(j, "gap");
  p.gap_mask = field<int>(j, "gap_mask");
  p.min_len = {field<int>(j, "l_normal"), field<int>(j, "l_lead"), field<int>(j, "l_follow")};
  p.validate();
  return p;
}

json to_json(const SpecialIds& ids) {
  return {{"pad", ids.pad}, {"unk", ids.unk},   {"cls", ids.cls},
          {"sep", ids.sep}, {"mask", ids.mask}, {"filler", ids.filler}};
}

SpecialIds special_ids_from_json(const json& j) {
  SpecialIds ids;
  ids.pad = field<VocabId>(j, "pad");
  ids.unk = field<VocabId>(j, "unk");
  ids.cls = field<VocabId>(j, "cls");
  ids.sep = field<VocabId>(j, "sep");
  ids.mask = field<VocabId>(j, "mask");
  ids.filler = field<VocabId>(j, "filler");
  return ids;
}

}  // namespace blanc::wire
