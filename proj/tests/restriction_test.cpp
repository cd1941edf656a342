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

#include "blanc/error.hpp"
#include "blanc/reference_backend.hpp"
#include "blanc/restriction.hpp"
#include "oracle/oracle.hpp"

namespace blanc {
namespace {

using Idx = std::vector<std::size_t>;
const std::vector<double> kScores = {0.1, 0.5, 0.3, 0.4};

TEST(TopN, Examples) {
  EXPECT_EQ(select_top_n(kScores, 2), (Idx{1, 3}));
  EXPECT_EQ(select_top_n(kScores, 9), (Idx{0, 1, 2, 3}));
  EXPECT_EQ(select_top_n(std::vector<double>{0.2, 0.2, 0.1}, 1), (Idx{0}));
  EXPECT_THROW(select_top_n(kScores, 0), std::invalid_argument);
}

TEST(Contiguous, Examples) {
  const auto r = select_contiguous(kScores, 2, WindowRank::Combined);
  EXPECT_EQ(r.first, 1u);
  EXPECT_EQ(r.last, 2u);
  const auto avg = select_contiguous(kScores, 2, WindowRank::Average);
  EXPECT_EQ(avg.first, 1u);
  const auto all = select_contiguous(kScores, 7, WindowRank::Combined);
  EXPECT_EQ(all.first, 0u);
  EXPECT_EQ(all.last, 3u);
  const auto flat = select_contiguous(std::vector<double>{0.2, 0.2, 0.2, 0.2}, 2, WindowRank::Combined);
  EXPECT_EQ(flat.first, 0u);
}

TEST(Threshold, Examples) {
  EXPECT_EQ(select_threshold(kScores, 0.35).indices, (Idx{1, 3}));
  EXPECT_EQ(select_threshold(kScores, -1).indices, (Idx{0, 1, 2, 3}));
  const auto fb = select_threshold(kScores, 0.9);
  EXPECT_EQ(fb.indices, (Idx{1}));
  EXPECT_TRUE(fb.fallback);
  EXPECT_EQ(select_threshold(kScores, 0.5).indices, (Idx{1}));  // strict comparison, then fallback
  EXPECT_TRUE(select_threshold(kScores, 0.5).fallback);
}

TEST(Specs, ParseAndLabels) {
  const auto specs = parse_strategies("full;top:1,2;contiguous:3;threshold:0,0.05", Aggregation::AverageOfSentences);
  ASSERT_EQ(specs.size(), 6u);
  EXPECT_EQ(specs[0].label(), "full");
  EXPECT_EQ(specs[2].label(), "top 2");
  EXPECT_EQ(specs[3].label(), "contiguous 3");
  EXPECT_EQ(specs[5].parameter(), "0.05");
  for (const auto& s : specs) EXPECT_EQ(s.aggregation, Aggregation::AverageOfSentences);
  EXPECT_THROW(parse_strategies("top:0", Aggregation::RecomputeCombined), ConfigError);
  EXPECT_THROW(parse_strategies("middle:2", Aggregation::RecomputeCombined), ConfigError);
}

BlancResult two_sentence_result() {
  // Sentence 0: 4 masked tokens, score 0.5; sentence 1: 1 masked token, score 0.
  return pool_sentences({CountMatrix{2, 2, 0, 0}, CountMatrix{1, 0, 0, 0}});
}

TEST(Restricted, PoolingAndAveraging) {
  const auto r = two_sentence_result();
  const Idx all = {0, 1};
  EXPECT_EQ(restricted_blanc(r, all, Aggregation::RecomputeCombined), r.score);
  EXPECT_EQ(r.score, 0.4);
  EXPECT_DOUBLE_EQ(restricted_blanc(r, all, Aggregation::AverageOfSentences), 0.25);
  EXPECT_EQ(restricted_blanc(r, Idx{0}, Aggregation::AverageOfSentences), 0.5);
  EXPECT_EQ(per_sentence_blanc(r), (std::vector<double>{0.5, 0.0}));
}

TEST(Restricted, AverageOfGivenSentenceScores) {
  const auto r = pool_sentences({CountMatrix{1, 1, 0, 0}, CountMatrix{7, 3, 0, 0}});
  EXPECT_DOUBLE_EQ(restricted_blanc(r, Idx{0, 1}, Aggregation::AverageOfSentences), 0.4);
}

TEST(PerSentence, MatchesOracleAndDocument) {
  ReferenceBackend b;
  const auto text = tokenize_text("Police police closed the market. Market prices rose.", b);
  const auto summary = tokenize_text("Market market police.", b);
  MeasureConfig c = help_max_help();
  c.masking.min_len = {1, 1, 1};
  const auto per = per_sentence_blanc(text, summary, c, b);
  blanc_oracle::Model model;
  model.base = b.base_counts();
  model.filler = b.special_ids().filler;
  const auto o = blanc_oracle::help(blanc_oracle::lines_of(text), blanc_oracle::lines_of(summary), 2, 1, {1, 1, 1}, model);
  ASSERT_EQ(per.size(), o.per_sentence.size());
  for (std::size_t i = 0; i < per.size(); ++i) {
    const auto& m = o.per_sentence[i];
    EXPECT_EQ(per[i], score_from_counts(m.k00, m.k01, m.k10, m.k11));
    EXPECT_GE(per[i], -1.0);
    EXPECT_LE(per[i], 1.0);
  }
  const auto one = tokenize_text("Police police closed the market.", b);
  EXPECT_EQ(per_sentence_blanc(one, summary, c, b), (std::vector<double>{evaluate(one, summary, c, b).score}));
}

TEST(Gain, IdentityIsOne) {
  const std::vector<double> full = {0.1, 0.4, 0.2, 0.5, 0.3};
  stats::HumanScores human = {{"relevance", {1, 2, 3, 5, 4}}};
  const auto g = correlation_gain(full, full, human);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(*g[0].factor, 1.0);
  EXPECT_FALSE(g[0].sign_flip);
}

TEST(Gain, SignFlipFlagged) {
  const std::vector<double> full = {1, 2, 3, 4, 5}, restricted = {5, 4, 3, 2, 1};
  stats::HumanScores human = {{"coherence", {1, 2, 3, 4, 5}}};
  const auto g = correlation_gain(full, restricted, human);
  EXPECT_EQ(*g[0].factor, -1.0);
  EXPECT_TRUE(g[0].sign_flip);
}

TEST(Gain, ZeroBaselineUndefined) {
  const std::vector<double> full = {1, 2, 2, 1}, restricted = {1, 2, 3, 4};
  stats::HumanScores human = {{"coherence", {1, 2, 3, 4}}};
  EXPECT_FALSE(correlation_gain(full, restricted, human, stats::CorrelationKind::Pearson)[0].factor.has_value());
}

TEST(Curves, CsvHasFullControlRow) {
  const std::vector<double> full = {0.1, 0.4, 0.2, 0.5, 0.3};
  stats::HumanScores human = {{"relevance", {1, 2, 3, 5, 4}}};
  std::vector<GainCurvePoint> points;
  for (auto& g : correlation_gain(full, full, human)) points.push_back({RestrictionSpec{}, g, 0});
  const auto csv = gain_curves_csv(points);
  EXPECT_NE(csv.find("full,"), std::string::npos);
  EXPECT_NE(csv.find(",relevance,1,"), std::string::npos);
}

}  // namespace
}  // namespace blanc
