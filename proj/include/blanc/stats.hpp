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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blanc::stats {

enum class CorrelationKind { Pearson, Spearman };
std::string to_string(CorrelationKind kind);

struct CorrelationResult {
  double coefficient = 0.0;  // in [-1, 1]
  double p_value = 1.0;      // two-sided
  std::size_t n = 0;
  CorrelationKind kind = CorrelationKind::Pearson;
};

// 1-based ranks; tied values share the mean of their ranks.
std::vector<double> fractional_ranks(std::span<const double> values);

// Two-sided p-value of a correlation coefficient from Student's t with n - 2
// degrees of freedom: t = r * sqrt((n - 2) / (1 - r^2)).
double t_approx_p_value(double r, std::size_t n);

// Both throw std::invalid_argument when sizes differ or n < 3, and return
// nullopt when either input has zero variance (coefficient undefined).
std::optional<CorrelationResult> pearson(std::span<const double> x, std::span<const double> y);
std::optional<CorrelationResult> spearman(std::span<const double> x, std::span<const double> y);
std::optional<CorrelationResult> correlate(CorrelationKind kind, std::span<const double> x,
                                           std::span<const double> y);

// Exact-style permutation p-value: (1 + #{|r_perm| >= |r_obs|}) / (permutations + 1),
// permuting y with a seeded shuffle. nullopt when the coefficient is undefined.
std::optional<double> permutation_p_value(CorrelationKind kind, std::span<const double> x,
                                          std::span<const double> y, int permutations,
                                          std::uint64_t seed);

// Per-sample human scores for one annotator group, keyed by quality.
using HumanScores = std::map<std::string, std::vector<double>>;

// coherence, consistency, fluency, relevance
std::span<const std::string> standard_qualities();

struct NamedScores {
  std::string label;
  std::vector<double> values;
};

// Rows are quality x {Pearson, Spearman}; columns are measures.
struct CorrelationTable {
  std::vector<std::string> measures;
  std::vector<std::string> qualities;
  // cells[quality][kind][measure]; nullopt where the coefficient is undefined.
  std::map<std::string, std::array<std::vector<std::optional<CorrelationResult>>, 2>> cells;
  std::vector<std::string> warnings;

  const std::optional<CorrelationResult>& at(const std::string& quality, CorrelationKind kind,
                                             std::size_t measure) const;
  // quality,correlation,measure,coefficient,p_value,n
  std::string to_csv() const;
  // Aligned table with the quality / correlation / one column per measure layout.
  std::string to_text(int precision = 3) const;
};

// Qualities missing from `human` are omitted with a warning. Throws
// std::invalid_argument when vectors are not aligned.
CorrelationTable correlation_table(std::span<const NamedScores> measures, const HumanScores& human,
                                   std::span<const std::string> qualities = standard_qualities());

struct ShiftCell {
  std::string quality;
  CorrelationKind kind = CorrelationKind::Pearson;
  std::optional<CorrelationResult> a_expert, a_turker, b_expert, b_turker;
  std::optional<double> ratio_a;  // corr(a, expert) / corr(a, turker)
  std::optional<double> ratio_b;
  std::optional<double> percent_change;  // (ratio_b / ratio_a - 1) * 100
};

struct ShiftReport {
  std::vector<ShiftCell> cells;
  std::vector<std::string> warnings;

  // quality,correlation,corr_a_expert,p_a_expert,corr_a_turker,p_a_turker,
  // corr_b_expert,p_b_expert,corr_b_turker,p_b_turker,ratio_a,ratio_b,percent_change
  std::string to_csv() const;
};

// How the expert-to-turker correlation ratio changes when switching from
// measure a to measure b, per quality and correlation kind.
ShiftReport expert_turker_shift(std::span<const double> measure_a, std::span<const double> measure_b,
                                const HumanScores& expert, const HumanScores& turker,
                                std::span<const std::string> qualities = standard_qualities());

// Sample mean and standard error (sample standard deviation / sqrt(n); 0 for n == 1).
struct MeanStderr {
  double mean = 0.0;
  double standard_error = 0.0;
};
MeanStderr mean_stderr(std::span<const double> values);

}  // namespace blanc::stats
