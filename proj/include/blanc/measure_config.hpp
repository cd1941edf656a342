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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blanc/masking.hpp"

namespace blanc {

enum class Family { Help, Tune };
enum class Metric { AccuracyDiff };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

// One member of a measure family.
struct MeasureConfig {
  Family family = Family::Help;
  MaskingPolicy masking;
  std::optional<TuningPolicy> tuning;  // set iff family == Tune
  Metric metric = Metric::AccuracyDiff;
  std::string label;

  void validate() const;

  // Canonical JSON: fixed key set, keys sorted. Includes the label.
  nlohmann::json to_json() const;
  static MeasureConfig from_json(const nlohmann::json& j);

  // 16 hex digits identifying the measure (everything but the label).
  std::string hash() const;

  friend bool operator==(const MeasureConfig&, const MeasureConfig&) = default;
};

// Human-readable form: one "[label]" section per config followed by
// "key = value" lines. Recognised keys:
//   family, metric, gap, gap_mask, l_normal, l_lead, l_follow,
//   gap_tune, gap_mask_tune, tune_mode, tune_seed, p_replace, p_keep,
//   tune_l_normal, tune_l_lead, tune_l_follow
// Tuning thresholds default to the inference thresholds. '#' starts a comment.
std::vector<MeasureConfig> parse_config_text(std::string_view text);
std::string to_config_text(const MeasureConfig& config);
std::string to_config_text(const std::vector<MeasureConfig>& configs);

// Reads a config file: JSON (object or array) if the first non-space character
// is '{' or '[', the sectioned text form otherwise. Also accepts
// "builtin:<name>" for the shipped families (see builtin_family).
std::vector<MeasureConfig> load_configs(const std::string& path_or_builtin);

// Configurations that reach the maximal mean score (max-help) and the
// maximal correlation with human scores (max-human) in each family.
MeasureConfig help_max_help();
MeasureConfig help_max_human();
MeasureConfig tune_max_help();
MeasureConfig tune_max_human();

// Max-help optimum followed by the single-parameter perturbations probed for
// BLANC-help: gap 3/1, gap 3/2, L_normal 5, L_lead 2, L_follow 2.
std::vector<MeasureConfig> help_perturbation_family();
// Max-help optimum followed by: inference gap 2/1, tuning gap 2/1,
// p_replace 0.1, L_normal 4, random tuning masks.
std::vector<MeasureConfig> tune_perturbation_family();

// "help-perturbation", "tune-perturbation", "help-max-help", "help-max-human",
// "tune-max-help", "tune-max-human". Throws ConfigError for other names.
std::vector<MeasureConfig> builtin_family(std::string_view name);

}  // namespace blanc
