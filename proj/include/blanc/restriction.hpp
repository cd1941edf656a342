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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blanc/backend.hpp"
#include "blanc/engine.hpp"
#include "blanc/stats.hpp"

namespace blanc {

enum class Strategy { Full, TopN, ContiguousN, Threshold };
enum class Aggregation { RecomputeCombined, AverageOfSentences };
enum class WindowRank { Combined, Average };

std::string_view to_string(Strategy s);
std::string_view to_string(Aggregation a);

struct RestrictionSpec {
  Strategy strategy = Strategy::Full;
  int n = 0;               // TopN, ContiguousN
  double threshold = 0.0;  // Threshold
  Aggregation aggregation = Aggregation::RecomputeCombined;
  WindowRank window_rank = WindowRank::Combined;  // ContiguousN

  void validate() const;
  // "full", "top 3", "contiguous 2", "threshold 0.1"
  std::string label() const;
  // The n or threshold value as text; empty for Full.
  std::string parameter() const;
};

// Parses "full;top:1,2,3;contiguous:1,2;threshold:0,0.05" into one spec per
// parameter value, all with the given aggregation. The window rank follows the
// aggregation (Combined for RecomputeCombined, Average otherwise).
std::vector<RestrictionSpec> parse_strategies(std::string_view text, Aggregation aggregation);

// Score of each sentence from its own count matrix.
std::vector<double> per_sentence_blanc(const BlancResult& result);
std::vector<double> per_sentence_blanc(const TokenizedText& text, const TokenizedText& summary,
                                       const MeasureConfig& config, ModelBackend& backend);

// Indices (ascending) of the n highest scores; ties favour lower indices.
std::vector<std::size_t> select_top_n(std::span<const double> scores, int n);

struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

// Window of length min(n, size) with the highest sum (Combined) or mean
// (Average); ties favour the leftmost window. Requires non-empty scores.
IndexRange select_contiguous(std::span<const double> scores, int n, WindowRank rank);

struct Selection {
  std::vector<std::size_t> indices;  // ascending
  bool fallback = false;             // threshold selected nothing; argmax used
};

// Indices with score strictly above the threshold, or {argmax} when none.
Selection select_threshold(std::span<const double> scores, double threshold);

Selection select(const RestrictionSpec& spec, std::span<const double> scores);

// RecomputeCombined pools the selected count matrices; AverageOfSentences is the
// unweighted mean of the selected sentence scores. Throws std::invalid_argument
// for an empty or out-of-range selection.
double restricted_blanc(const BlancResult& result, std::span<const std::size_t> selection,
                        Aggregation aggregation);

struct GainResult {
  std::string quality;
  std::optional<stats::CorrelationResult> full;
  std::optional<stats::CorrelationResult> restricted;
  std::optional<double> factor;  // restricted / full
  bool sign_flip = false;
};

// Factor by which the correlation with human scores changes when restricted
// scores replace full-text scores, per quality. Factor is undefined when the
// full-text correlation is zero or undefined.
std::vector<GainResult> correlation_gain(std::span<const double> full_scores,
                                         std::span<const double> restricted_scores,
                                         const stats::HumanScores& human,
                                         stats::CorrelationKind kind = stats::CorrelationKind::Spearman);

struct GainCurvePoint {
  RestrictionSpec spec;
  GainResult gain;
  std::size_t fallbacks = 0;  // samples where a threshold selection fell back to argmax
};

// strategy,parameter,aggregation,quality,factor,rho_full,p_full,rho_restricted,p_restricted,sign_flip,fallbacks
std::string gain_curves_csv(std::span<const GainCurvePoint> points);

}  // namespace blanc
