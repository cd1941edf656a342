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

#include <map>
#include <set>

#include "blanc/error.hpp"
#include "blanc/masking.hpp"

namespace blanc {
namespace {

Sentence normal_tokens(int n, int chars = 8) {
  Sentence s;
  for (int i = 0; i < n; ++i) s.push_back(make_token(std::string(chars, 'a'), TokenKind::Normal, 100 + i));
  return s;
}

TEST(Eligibility, Examples) {
  const LengthThresholds t{6, 1, 100};
  EXPECT_FALSE(is_eligible(make_token("flood", TokenKind::Normal, 1), t));
  EXPECT_TRUE(is_eligible(make_token("market", TokenKind::Normal, 1), t));
  EXPECT_TRUE(is_eligible(make_token("a", TokenKind::Lead, 1), t));
  EXPECT_FALSE(is_eligible(make_token("abcdefgh", TokenKind::Follow, 1), t));
}

TEST(Policy, Validation) {
  EXPECT_THROW((MaskingPolicy{0, 1, {}}).validate(), ConfigError);
  EXPECT_THROW((MaskingPolicy{2, 3, {}}).validate(), ConfigError);
  EXPECT_THROW((MaskingPolicy{2, 1, {0, 1, 1}}).validate(), ConfigError);
  TuningPolicy tp;
  tp.p_replace = 0.6;
  tp.p_keep = 0.5;
  EXPECT_THROW(tp.validate(), ConfigError);
  tp.p_keep = -0.1;
  EXPECT_THROW(tp.validate(), ConfigError);
}

TEST(EvenSchedule, FourTokensGapTwo) {
  const auto s = even_schedule(normal_tokens(4), {2, 1, {}});
  EXPECT_EQ(s.passes, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(s.sentence_len, 4);
}

TEST(EvenSchedule, SixTokensGapThreeMaskTwo) {
  const auto s = even_schedule(normal_tokens(6), {3, 2, {}});
  ASSERT_EQ(s.passes.size(), 3u);
  std::vector<int> seen(6, 0);
  for (const auto& p : s.passes)
    for (int j : p) ++seen[j];
  EXPECT_EQ(seen, std::vector<int>(6, 2));
}

TEST(EvenSchedule, FullMaskEveryPass) {
  const auto s = even_schedule(normal_tokens(5), {3, 3, {}});
  for (const auto& p : s.passes) EXPECT_EQ(p, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(EvenSchedule, NoEligibleTokensGivesEmptyPasses) {
  const auto s = even_schedule(normal_tokens(3, 2), {2, 1, {}});
  ASSERT_EQ(s.passes.size(), 2u);
  EXPECT_EQ(s.active_passes(), 0u);
}

TEST(EvenSchedule, CoverageProperty) {
  // Mixed kinds and lengths; each eligible position lands in exactly gap_mask passes.
  for (int len = 1; len <= 64; ++len) {
    Sentence s;
    for (int j = 0; j < len; ++j)
      s.push_back(make_token(std::string(1 + j % 9, 'x'), j % 3 == 1 ? TokenKind::Lead : TokenKind::Normal, j));
    for (int gap = 1; gap <= 6; ++gap)
      for (int gm = 1; gm <= gap; ++gm) {
        const MaskingPolicy p{gap, gm, {6, 1, 1}};
        const auto sched = even_schedule(s, p);
        ASSERT_EQ(static_cast<int>(sched.passes.size()), gap);
        std::vector<int> seen(len, 0);
        for (const auto& pass : sched.passes)
          for (int j : pass) ++seen[j];
        for (int j = 0; j < len; ++j) ASSERT_EQ(seen[j], is_eligible(s[j], p) ? gm : 0) << len << " " << gap << " " << gm;
      }
  }
}

TEST(EvenSchedule, RaisingThresholdNeverAddsPositions) {
  Sentence s;
  for (int j = 0; j < 20; ++j) s.push_back(make_token(std::string(1 + j % 10, 'y'), TokenKind::Normal, j));
  for (int t = 1; t < 12; ++t) {
    const auto lo = even_schedule(s, {3, 2, {t, 1, 1}});
    const auto hi = even_schedule(s, {3, 2, {t + 1, 1, 1}});
    for (std::size_t p = 0; p < lo.passes.size(); ++p) {
      const std::set<int> a(lo.passes[p].begin(), lo.passes[p].end());
      for (int j : hi.passes[p]) EXPECT_TRUE(a.count(j));
    }
  }
}

TuningPolicy random_policy(std::uint64_t seed) {
  TuningPolicy p;
  p.mode = TuningMode::Random;
  p.seed = seed;
  p.gap_tune = 4;
  p.gap_mask_tune = 3;
  return p;
}

TEST(RandomSchedule, DeterministicUnderSeed) {
  const auto s = normal_tokens(40);
  EXPECT_EQ(random_schedule(s, random_policy(7)).passes, random_schedule(s, random_policy(7)).passes);
  EXPECT_NE(random_schedule(s, random_policy(7)).passes, random_schedule(s, random_policy(8)).passes);
  EXPECT_NE(random_schedule(s, random_policy(7), 0).passes, random_schedule(s, random_policy(7), 1).passes);
}

TEST(RandomSchedule, FullProbabilityMasksAll) {
  auto p = random_policy(3);
  p.gap_mask_tune = p.gap_tune;
  const auto sched = random_schedule(normal_tokens(9), p);
  for (const auto& pass : sched.passes) EXPECT_EQ(pass.size(), 9u);
}

TEST(RandomSchedule, MaskedFractionMonteCarlo) {
  const auto sched = random_schedule(normal_tokens(10000), random_policy(11));
  ASSERT_EQ(sched.passes.size(), 4u);
  EXPECT_NEAR(static_cast<double>(sched.passes[0].size()) / 10000.0, 0.75, 0.02);
  EXPECT_EQ(tuning_schedule(normal_tokens(8), random_policy(1)).passes,
            random_schedule(normal_tokens(8), random_policy(1)).passes);
}

TEST(Corruption, DegenerateAllMask) {
  TuningPolicy p;
  p.p_keep = 0;
  const auto sched = even_schedule(normal_tokens(30), p.as_masking());
  for (const auto& row : corruption_plan(sched, p).actions)
    for (auto a : row) EXPECT_EQ(a, CorruptionAction::MaskSymbol);
}

std::map<CorruptionAction, double> fractions(const TuningPolicy& p) {
  MaskSchedule sched;
  sched.sentence_len = 10000;
  sched.passes.emplace_back();
  for (int j = 0; j < 10000; ++j) sched.passes[0].push_back(j);
  std::map<CorruptionAction, double> out;
  const auto plan = corruption_plan(sched, p);
  for (auto a : plan.actions[0]) out[a] += 1.0 / 10000;
  return out;
}

TEST(Corruption, KeepFraction) {
  TuningPolicy p;
  p.seed = 5;
  auto f = fractions(p);
  EXPECT_NEAR(f[CorruptionAction::KeepOriginal], 0.10, 0.01);
  EXPECT_EQ(f[CorruptionAction::ReplaceRandom], 0.0);
}

TEST(Corruption, ThreeWaySplit) {
  TuningPolicy p;
  p.seed = 6;
  p.p_replace = 0.1;
  auto f = fractions(p);
  EXPECT_NEAR(f[CorruptionAction::MaskSymbol], 0.8, 0.015);
  EXPECT_NEAR(f[CorruptionAction::ReplaceRandom], 0.1, 0.01);
  EXPECT_NEAR(f[CorruptionAction::KeepOriginal], 0.1, 0.01);
}

TEST(Corruption, Reproducible) {
  TuningPolicy p;
  p.seed = 9;
  p.p_replace = 0.3;
  const auto sched = even_schedule(normal_tokens(50), p.as_masking());
  EXPECT_EQ(corruption_plan(sched, p).actions, corruption_plan(sched, p).actions);
}

}  // namespace
}  // namespace blanc
