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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "blanc/error.hpp"
#include "blanc/measure_config.hpp"

namespace blanc {
namespace {

TEST(Builtins, TuneOptimumValues) {
  const auto c = tune_max_help();
  EXPECT_EQ(c.family, Family::Tune);
  EXPECT_EQ(c.masking.gap, 3);
  EXPECT_EQ(c.masking.gap_mask, 2);
  EXPECT_EQ(c.masking.min_len, (LengthThresholds{6, 1, 1}));
  ASSERT_TRUE(c.tuning);
  EXPECT_EQ(c.tuning->mode, TuningMode::Even);
  EXPECT_EQ(c.tuning->gap_tune, 4);
  EXPECT_EQ(c.tuning->gap_mask_tune, 3);
  EXPECT_EQ(c.tuning->p_replace, 0.0);
  EXPECT_EQ(c.tuning->p_keep, 0.1);
}

TEST(Builtins, HelpOptimumValues) {
  const auto c = help_max_help();
  EXPECT_EQ(c.family, Family::Help);
  EXPECT_EQ(c.masking, (MaskingPolicy{2, 1, {6, 1, 1}}));
  EXPECT_FALSE(c.tuning);
  EXPECT_EQ(help_max_human().masking.min_len, (LengthThresholds{4, 1, 100}));
}

TEST(Builtins, FamiliesHaveDistinctLabelsAndHashes) {
  for (const auto& name : {"help-perturbation", "tune-perturbation"}) {
    const auto family = builtin_family(name);
    EXPECT_EQ(family.size(), 6u);
    std::set<std::string> labels, hashes;
    for (const auto& c : family) {
      c.validate();
      labels.insert(c.label);
      hashes.insert(c.hash());
    }
    EXPECT_EQ(labels.size(), 6u);
    EXPECT_EQ(hashes.size(), 6u);
  }
  EXPECT_THROW(builtin_family("nope"), ConfigError);
}

TEST(Serialization, TextRoundTrip) {
  for (const auto& c : builtin_family("tune-perturbation")) {
    const auto back = parse_config_text(to_config_text(c));
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0], c);
  }
  const auto family = builtin_family("help-perturbation");
  EXPECT_EQ(parse_config_text(to_config_text(family)), family);
}

TEST(Serialization, JsonRoundTrip) {
  const auto c = tune_max_help();
  EXPECT_EQ(MeasureConfig::from_json(c.to_json()), c);
  EXPECT_EQ(MeasureConfig::from_json(nlohmann::json::parse(c.to_json().dump())), c);
}

TEST(Hash, IgnoresLabelOnly) {
  auto a = tune_max_help(), b = tune_max_help();
  b.label = "renamed";
  EXPECT_EQ(a.hash(), b.hash());
  b.tuning->seed = 1;
  EXPECT_NE(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
}

TEST(Parse, HandWrittenIni) {
  const auto configs = parse_config_text(
      "# comment\n"
      "[my tune]\n"
      "family = tune\n"
      "gap = 3\n"
      "gap_mask = 2\n"
      "l_normal = 4\n"
      "tune_mode = random\n"
      "tune_seed = 12\n"
      "p_replace = 0.1\n"
      "\n"
      "[plain help]\n"
      "family = help\n");
  ASSERT_EQ(configs.size(), 2u);
  EXPECT_EQ(configs[0].label, "my tune");
  EXPECT_EQ(configs[0].tuning->mode, TuningMode::Random);
  EXPECT_EQ(configs[0].tuning->seed, 12u);
  EXPECT_EQ(configs[0].tuning->min_len.normal, 4);  // follows the inference thresholds
  EXPECT_EQ(configs[1].masking, (MaskingPolicy{}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_config_text("[a]\nfamily = help\ngap_tune = 3\n"), ConfigError);
  EXPECT_THROW(parse_config_text("[a]\nfamily = help\ngap = 1\ngap_mask = 2\n"), ConfigError);
  EXPECT_THROW(parse_config_text("[a]\nfamily = help\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(parse_config_text("[a]\nfamily = help\n[a]\nfamily = help\n"), ConfigError);
  EXPECT_THROW(parse_config_text("gap = 2\n"), ConfigError);
  MeasureConfig tune_without_policy;
  tune_without_policy.family = Family::Tune;
  EXPECT_THROW(tune_without_policy.validate(), ConfigError);
}

TEST(Load, FilesAndBuiltins) {
  EXPECT_EQ(load_configs("builtin:tune-max-help").front(), tune_max_help());
  const auto dir = std::filesystem::temp_directory_path();
  {
    std::ofstream(dir / "blanc_cfg.ini") << to_config_text(builtin_family("help-perturbation"));
    std::ofstream(dir / "blanc_cfg.json") << nlohmann::json::array({help_max_help().to_json()}).dump();
  }
  EXPECT_EQ(load_configs((dir / "blanc_cfg.ini").string()), builtin_family("help-perturbation"));
  EXPECT_EQ(load_configs((dir / "blanc_cfg.json").string()).front(), help_max_help());
  EXPECT_THROW(load_configs((dir / "missing.ini").string()), ConfigError);
  std::filesystem::remove(dir / "blanc_cfg.ini");
  std::filesystem::remove(dir / "blanc_cfg.json");
}

TEST(Shipped, ConfigFilesMatchBuiltins) {
  const std::string root = BLANC_SOURCE_DIR;
  EXPECT_EQ(load_configs(root + "/configs/help-perturbation.ini"), builtin_family("help-perturbation"));
  EXPECT_EQ(load_configs(root + "/configs/tune-perturbation.ini"), builtin_family("tune-perturbation"));
  EXPECT_EQ(load_configs(root + "/configs/optima.ini"),
            (std::vector<MeasureConfig>{help_max_help(), help_max_human(), tune_max_help(), tune_max_human()}));
}

}  // namespace
}  // namespace blanc
