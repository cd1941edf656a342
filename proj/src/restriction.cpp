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

#include "blanc/restriction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blanc/error.hpp"

namespace blanc {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Full:
      return "full";
    case Strategy::TopN:
      return "top";
    case Strategy::ContiguousN:
      return "contiguous";
    case Strategy::Threshold:
      return "threshold";
  }
  return "full";
}

std::string_view to_string(Aggregation a) {
  return a == Aggregation::RecomputeCombined ? "combined" : "average";
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

void RestrictionSpec::validate() const {
  if ((strategy == Strategy::TopN || strategy == Strategy::ContiguousN) && n < 1)
    throw ConfigError("restriction " + std::string(to_string(strategy)) + " needs n >= 1");
}

std::string RestrictionSpec::parameter() const {
  switch (strategy) {
    case Strategy::Full:
      return "";
    case Strategy::TopN:
    case Strategy::ContiguousN:
      return std::to_string(n);
    case Strategy::Threshold:
      return shortest(threshold);
  }
  return "";
}

std::string RestrictionSpec::label() const {
  const std::string p = parameter();
  return std::string(to_string(strategy)) + (p.empty() ? "" : " " + p);
}

std::vector<RestrictionSpec> parse_strategies(std::string_view text, Aggregation aggregation) {
  std::vector<RestrictionSpec> out;
  for (const auto& group : split(text, ';')) {
    if (group.empty()) continue;
    const auto colon = group.find(':');
    const std::string name = trim(std::string_view(group).substr(0, colon));
    RestrictionSpec base;
    base.aggregation = aggregation;
    base.window_rank = aggregation == Aggregation::RecomputeCombined ? WindowRank::Combined : WindowRank::Average;
    if (name == "full") {
      if (colon != std::string::npos) throw ConfigError("strategy \"full\" takes no parameters");
      out.push_back(base);
      continue;
    }
    if (name == "top")
      base.strategy = Strategy::TopN;
    else if (name == "contiguous")
      base.strategy = Strategy::ContiguousN;
    else if (name == "threshold")
      base.strategy = Strategy::Threshold;
    else
      throw ConfigError("unknown restriction strategy \"" + name + "\"");
    if (colon == std::string::npos) throw ConfigError("strategy \"" + name + "\" needs values, e.g. " + name + ":1,2");
    for (const auto& value : split(std::string_view(group).substr(colon + 1), ',')) {
      RestrictionSpec spec = base;
      const char* end = value.data() + value.size();
      std::from_chars_result res{};
      if (spec.strategy == Strategy::Threshold)
        res = std::from_chars(value.data(), end, spec.threshold);
      else
        res = std::from_chars(value.data(), end, spec.n);
      if (res.ec != std::errc() || res.ptr != end || value.empty())
        throw ConfigError("bad value \"" + value + "\" for strategy \"" + name + "\"");
      spec.validate();
      out.push_back(spec);
    }
  }
  if (out.empty()) throw ConfigError("no restriction strategies given");
  return out;
}

std::vector<double> per_sentence_blanc(const BlancResult& result) {
  std::vector<double> out;
  out.reserve(result.per_sentence.size());
  for (const auto& m : result.per_sentence) out.push_back(m.score());
  return out;
}

std::vector<double> per_sentence_blanc(const TokenizedText& text, const TokenizedText& summary,
                                       const MeasureConfig& config, ModelBackend& backend) {
  return per_sentence_blanc(evaluate(text, summary, config, backend));
}

std::vector<std::size_t> select_top_n(std::span<const double> scores, int n) {
  if (n < 1) throw std::invalid_argument("select_top_n needs n >= 1");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  order.resize(std::min(order.size(), static_cast<std::size_t>(n)));
  std::sort(order.begin(), order.end());
  return order;
}

IndexRange select_contiguous(std::span<const double> scores, int n, WindowRank rank) {
  if (n < 1) throw std::invalid_argument("select_contiguous needs n >= 1");
  if (scores.empty()) throw std::invalid_argument("select_contiguous needs at least one score");
  const std::size_t len = std::min(scores.size(), static_cast<std::size_t>(n));
  IndexRange best{0, len - 1};
  double best_value = 0.0;
  for (std::size_t first = 0; first + len <= scores.size(); ++first) {
    // Summed from scratch so equal windows compare exactly equal.
    double sum = 0.0;
    for (std::size_t i = first; i < first + len; ++i) sum += scores[i];
    const double value = rank == WindowRank::Combined ? sum : sum / static_cast<double>(len);
    if (first == 0 || value > best_value) {
      best = {first, first + len - 1};
      best_value = value;
    }
  }
  return best;
}

Selection select_threshold(std::span<const double> scores, double threshold) {
  Selection sel;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i] > threshold) sel.indices.push_back(i);
  if (sel.indices.empty() && !scores.empty()) {
    sel.indices.push_back(static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin()));
    sel.fallback = true;
  }
  return sel;
}

Selection select(const RestrictionSpec& spec, std::span<const double> scores) {
  spec.validate();
  Selection sel;
  switch (spec.strategy) {
    case Strategy::Full:
      sel.indices.resize(scores.size());
      std::iota(sel.indices.begin(), sel.indices.end(), 0);
      break;
    case Strategy::TopN:
      sel.indices = select_top_n(scores, spec.n);
      break;
    case Strategy::ContiguousN: {
      if (scores.empty()) break;
      const IndexRange r = select_contiguous(scores, spec.n, spec.window_rank);
      for (std::size_t i = r.first; i <= r.last; ++i) sel.indices.push_back(i);
      break;
    }
    case Strategy::Threshold:
      sel = select_threshold(scores, spec.threshold);
      break;
  }
  return sel;
}

double restricted_blanc(const BlancResult& result, std::span<const std::size_t> selection,
                        Aggregation aggregation) {
  if (selection.empty()) throw std::invalid_argument("restricted_blanc needs a non-empty selection");
  for (std::size_t i : selection)
    if (i >= result.per_sentence.size()) throw std::invalid_argument("selection index out of range");
  if (aggregation == Aggregation::RecomputeCombined) {
    CountMatrix pooled;
    for (std::size_t i : selection) pooled += result.per_sentence[i];
    return pooled.score();
  }
  double sum = 0.0;
  for (std::size_t i : selection) sum += result.per_sentence[i].score();
  return sum / static_cast<double>(selection.size());
}

std::vector<GainResult> correlation_gain(std::span<const double> full_scores,
                                         std::span<const double> restricted_scores,
                                         const stats::HumanScores& human, stats::CorrelationKind kind) {
  if (full_scores.size() != restricted_scores.size())
    throw std::invalid_argument("full and restricted scores are not aligned");
  std::vector<GainResult> out;
  for (const auto& [quality, values] : human) {
    GainResult g;
    g.quality = quality;
    g.full = stats::correlate(kind, full_scores, values);
    g.restricted = stats::correlate(kind, restricted_scores, values);
    if (g.full && g.restricted && g.full->coefficient != 0.0) {
      g.factor = g.restricted->coefficient / g.full->coefficient;
      g.sign_flip = *g.factor < 0.0;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string gain_curves_csv(std::span<const GainCurvePoint> points) {
  std::string out =
      "strategy,parameter,aggregation,quality,factor,rho_full,p_full,rho_restricted,p_restricted,sign_flip,"
      "fallbacks\n";
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string("nan"); };
  for (const auto& p : points) {
    const auto& g = p.gain;
    out += std::string(to_string(p.spec.strategy)) + "," + p.spec.parameter() + "," +
           std::string(to_string(p.spec.aggregation)) + "," + g.quality + "," + opt(g.factor) + "," +
           (g.full ? num(g.full->coefficient) + "," + num(g.full->p_value) : "nan,nan") + "," +
           (g.restricted ? num(g.restricted->coefficient) + "," + num(g.restricted->p_value) : "nan,nan") + "," +
           (g.sign_flip ? "1" : "0") + "," + std::to_string(p.fallbacks) + "\n";
  }
  return out;
}

}  // namespace blanc
