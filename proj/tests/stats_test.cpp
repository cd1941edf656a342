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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "blanc/stats.hpp"
#include "oracle/oracle.hpp"

namespace blanc::stats {
namespace {

using V = std::vector<double>;

TEST(Pearson, Examples) {
  const V x = {1, 2, 3, 4};
  EXPECT_EQ(pearson(x, V{1, 3, 2, 4})->coefficient, 0.8);
  EXPECT_DOUBLE_EQ(pearson(x, V{3, 5, 7, 9})->coefficient, 1.0);
  EXPECT_DOUBLE_EQ(pearson(x, V{-1, -2, -3, -4})->coefficient, -1.0);
}

TEST(Pearson, TwoSidedPValue) {
  // With two degrees of freedom the t tail has a closed form: p = 1 - r here.
  EXPECT_NEAR(pearson(V{1, 2, 3, 4}, V{1, 3, 2, 4})->p_value, 0.2, 1e-12);
  EXPECT_NEAR(t_approx_p_value(0.0, 10), 1.0, 1e-15);
  EXPECT_EQ(t_approx_p_value(1.0, 10), 0.0);
}

TEST(Pearson, PValueFallsWithCoefficient) {
  double last = 1.0;
  for (double r = 0.05; r < 1.0; r += 0.05) {
    const double p = t_approx_p_value(r, 12);
    EXPECT_LT(p, last);
    EXPECT_DOUBLE_EQ(p, t_approx_p_value(-r, 12));
    last = p;
  }
}

TEST(Pearson, UndefinedAndInvalid) {
  EXPECT_FALSE(pearson(V{1, 1, 1}, V{1, 2, 3}).has_value());
  EXPECT_THROW(pearson(V{1, 2, 3}, V{1, 2}), std::invalid_argument);
  EXPECT_THROW(pearson(V{1, 2}, V{1, 2}), std::invalid_argument);
}

TEST(Pearson, AffineInvariance) {
  const V x = {0.3, 1.2, -0.4, 2.2, 0.9, 1.1}, y = {1, 0.5, -2, 3, 0.1, 0.4};
  V y2;
  for (double v : y) y2.push_back(3.5 * v - 7);
  EXPECT_NEAR(pearson(x, y)->coefficient, pearson(x, y2)->coefficient, 1e-12);
}

TEST(Spearman, Examples) {
  const V x = {1, 2, 3, 4, 5};
  V y;
  for (double v : x) y.push_back(std::exp(v));
  EXPECT_DOUBLE_EQ(spearman(x, y)->coefficient, 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, V{5, 4, 3, 2, 1})->coefficient, -1.0);
}

TEST(Spearman, FractionalRanks) {
  EXPECT_EQ(fractional_ranks(V{10, 20, 20, 5}), (V{2, 3.5, 3.5, 1}));
}

TEST(Spearman, AllPermutationsMatchRankFormula) {
  for (int n = 3; n <= 6; ++n) {
    V x(n);
    std::iota(x.begin(), x.end(), 1.0);
    V y = x;
    do {
      const auto r = spearman(x, y);
      ASSERT_TRUE(r.has_value());
      ASSERT_NEAR(r->coefficient, blanc_oracle::spearman(x, y), 1e-12);
    } while (std::next_permutation(y.begin(), y.end()));
  }
}

TEST(Spearman, AllPermutationsWithTies) {
  const std::vector<V> multisets = {{1, 1, 2}, {1, 1, 2, 3}, {1, 2, 2, 2, 3}, {1, 1, 2, 2, 3, 3}, {4, 4, 4, 1, 1, 2}};
  for (V y : multisets) {
    V x(y.size());
    std::iota(x.begin(), x.end(), 1.0);
    x[1] = x[0];  // ties on both sides
    std::sort(y.begin(), y.end());
    do {
      const auto r = spearman(x, y);
      ASSERT_TRUE(r.has_value());
      ASSERT_NEAR(r->coefficient, blanc_oracle::spearman(x, y), 1e-12);
    } while (std::next_permutation(y.begin(), y.end()));
  }
}

TEST(Spearman, IncreasingTransformInvariance) {
  const V x = {0.3, 1.2, 1.2, 2.2, 0.9, -1}, y = {1, 0.5, 0.5, 3, 0.1, 0.4};
  V x2;
  for (double v : x) x2.push_back(std::pow(v + 2, 3));
  EXPECT_EQ(spearman(x, y)->coefficient, spearman(x2, y)->coefficient);
}

TEST(Permutation, ShuffledScoresAreNotSignificant) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  V x, y;
  for (int i = 0; i < 60; ++i) {
    x.push_back(d(rng));
    y.push_back(d(rng));
  }
  const auto p = permutation_p_value(CorrelationKind::Pearson, x, y, 2000, 17);
  ASSERT_TRUE(p.has_value());
  EXPECT_GT(*p, 0.05);
  EXPECT_EQ(*p, *permutation_p_value(CorrelationKind::Pearson, x, y, 2000, 17));
  EXPECT_LT(std::abs(pearson(x, y)->coefficient), 0.3);
}

TEST(Permutation, StrongCorrelationIsSignificant) {
  V x, y;
  for (int i = 0; i < 12; ++i) {
    x.push_back(i);
    y.push_back(i + (i % 3) * 0.5);
  }
  EXPECT_LT(*permutation_p_value(CorrelationKind::Spearman, x, y, 2000, 1), 0.01);
}

TEST(Table, IdentityMeasureGivesOne) {
  const V relevance = {1, 3, 2, 5, 4};
  HumanScores human = {{"relevance", relevance}, {"fluency", {2, 2, 3, 1, 5}}};
  const std::vector<NamedScores> measures = {{"copy", relevance}, {"other", {0.1, 0.2, 0.3, 0.2, 0.1}}};
  const auto t = correlation_table(measures, human);
  EXPECT_DOUBLE_EQ(t.at("relevance", CorrelationKind::Pearson, 0)->coefficient, 1.0);
  EXPECT_DOUBLE_EQ(t.at("relevance", CorrelationKind::Spearman, 0)->coefficient, 1.0);
  // coherence and consistency are missing.
  EXPECT_EQ(t.qualities, (std::vector<std::string>{"fluency", "relevance"}));
  EXPECT_EQ(t.warnings.size(), 2u);
}

TEST(Table, CsvAndTextLayout) {
  HumanScores human = {{"coherence", {1, 2, 3, 4}}};
  const std::vector<NamedScores> measures = {{"help", {1, 3, 2, 4}}, {"human", {4, 3, 2, 1}}};
  const auto t = correlation_table(measures, human);
  EXPECT_EQ(t.to_csv(),
            "quality,correlation,measure,coefficient,p_value,n\n"
            "coherence,Pearson,help,0.80000000000000004,0.19999999999999996,4\n"
            "coherence,Pearson,human,-1,0,4\n"
            "coherence,Spearman,help,0.80000000000000004,0.19999999999999996,4\n"
            "coherence,Spearman,human,-1,0,4\n");
  EXPECT_EQ(t.to_text(),
            "Quality   | Correlation |  help |  human\n"
            "----------+-------------+-------+-------\n"
            "coherence | Pearson     | 0.800 | -1.000\n"
            "          | Spearman    | 0.800 | -1.000\n"
            "----------+-------------+-------+-------\n");
}

TEST(Shift, IdenticalMeasuresGiveZero) {
  const V m = {0.1, 0.4, 0.2, 0.8, 0.5};
  HumanScores expert = {{"fluency", {1, 3, 2, 5, 4}}}, turker = {{"fluency", {2, 3, 1, 4, 5}}};
  const auto r = expert_turker_shift(m, m, expert, turker);
  for (const auto& c : r.cells) EXPECT_DOUBLE_EQ(*c.percent_change, 0.0);
}

TEST(Shift, SameGroupsGiveRatioOne) {
  const V a = {0.1, 0.4, 0.2, 0.8, 0.5}, b = {3, 1, 2, 2.5, 0};
  HumanScores h = {{"coherence", {1, 3, 2, 5, 4}}};
  for (const auto& c : expert_turker_shift(a, b, h, h).cells) {
    EXPECT_DOUBLE_EQ(*c.ratio_a, 1.0);
    EXPECT_DOUBLE_EQ(*c.percent_change, 0.0);
  }
}

TEST(Shift, ConstructedSeventyPercent) {
  // u and v are centred, orthogonal and of equal norm, so corr(s u + v, u) /
  // corr(s u + v, v) = s.
  const V u = {1, -1, 1, -1}, v = {1, 1, -1, -1};
  V a, b;
  for (int i = 0; i < 4; ++i) {
    a.push_back(u[i] + v[i]);
    b.push_back(1.7 * u[i] + v[i]);
  }
  const auto r = expert_turker_shift(a, b, {{"fluency", u}}, {{"fluency", v}});
  const auto& c = r.cells.front();
  ASSERT_EQ(c.kind, CorrelationKind::Pearson);
  EXPECT_NEAR(*c.ratio_a, 1.0, 1e-12);
  EXPECT_NEAR(*c.ratio_b, 1.7, 1e-12);
  EXPECT_NEAR(*c.percent_change, 70.0, 1e-9);
}

TEST(Shift, ZeroTurkerCorrelationReported) {
  const V a = {1, 2, 3, 4}, u = {1, 2, 3, 4}, v = {1, -1, -1, 1};
  const auto r = expert_turker_shift(a, a, {{"fluency", u}}, {{"fluency", v}});
  EXPECT_FALSE(r.cells.front().ratio_a.has_value());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(MeanStderr, Basics) {
  EXPECT_EQ(mean_stderr(V{0.25}).mean, 0.25);
  EXPECT_EQ(mean_stderr(V{0.25}).standard_error, 0.0);
  EXPECT_DOUBLE_EQ(mean_stderr(V{0.1, 0.3}).mean, 0.2);
  EXPECT_DOUBLE_EQ(mean_stderr(V{0.1, 0.3}).standard_error, 0.1);
}

}  // namespace
}  // namespace blanc::stats
