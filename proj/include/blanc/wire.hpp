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

// JSON wire forms shared by the remote backend client and report writers.
//
//   Token           {"surface", "char_len", "kind": "normal"|"lead"|"follow", "vocab_id"}
//   MaskedInstance  {"input_ids", "masked_positions", "context_len"}  (+ "targets" when present)
//   TuningPolicy    {"gap_tune", "gap_mask_tune", "mode": "even"|"random", "seed",
//                    "p_replace", "p_keep", "l_normal", "l_lead", "l_follow"}
//   SpecialIds      {"pad", "unk", "cls", "sep", "mask", "filler"}

#include <json.hpp>

#include "blanc/backend.hpp"

namespace blanc::wire {

using nlohmann::json;

json to_json(const Token& token);
Token token_from_json(const json& j);

json to_json(const Sentence& sentence);
Sentence sentence_from_json(const json& j);

// Targets are omitted unless include_targets is set; the model must not see them.
json to_json(const MaskedInstance& instance, bool include_targets = false);
MaskedInstance instance_from_json(const json& j);

json to_json(const TuningPolicy& policy);
TuningPolicy tuning_from_json(const json& j);

json to_json(const MaskingPolicy& policy);
MaskingPolicy masking_from_json(const json& j);

json to_json(const SpecialIds& ids);
SpecialIds special_ids_from_json(const json& j);

std::string_view to_string(TuningMode mode);
TuningMode tuning_mode_from_string(std::string_view name);

}  // namespace blanc::wire
