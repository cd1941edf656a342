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

#include "blanc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "blanc/random.hpp"

namespace blanc::stats {

std::string to_string(CorrelationKind kind) {
  return kind == CorrelationKind::Pearson ? "Pearson" : "Spearman";
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 share ranks i+1..j
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double t_approx_p_value(double r, std::size_t n) {
  if (n < 3) throw std::invalid_argument("p-value needs n >= 3");
  const double r_abs = std::min(std::fabs(r), 1.0);
  if (r_abs == 1.0) return 0.0;
  const auto dof = static_cast<double>(n - 2);
  const double t = r_abs * std::sqrt(dof / ((1.0 - r_abs) * (1.0 + r_abs)));
  boost::math::students_t_distribution<double> dist(dof);
  return std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, t)), 0.0, 1.0);
}

namespace {

void check_sizes(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation inputs differ in length");
  if (x.size() < 3) throw std::invalid_argument("correlation needs at least 3 samples");
}

std::optional<double> pearson_coefficient(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> coefficient(CorrelationKind kind, std::span<const double> x,
                                  std::span<const double> y) {
  if (kind == CorrelationKind::Pearson) return pearson_coefficient(x, y);
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  return pearson_coefficient(rx, ry);
}

}  // namespace

std::optional<CorrelationResult> correlate(CorrelationKind kind, std::span<const double> x,
                                           std::span<const double> y) {
  check_sizes(x, y);
  const auto r = coefficient(kind, x, y);
  if (!r) return std::nullopt;
  return CorrelationResult{*r, t_approx_p_value(*r, x.size()), x.size(), kind};
}

std::optional<CorrelationResult> pearson(std::span<const double> x, std::span<const double> y) {
  return correlate(CorrelationKind::Pearson, x, y);
}

std::optional<CorrelationResult> spearman(std::span<const double> x, std::span<const double> y) {
  return correlate(CorrelationKind::Spearman, x, y);
}

std::optional<double> permutation_p_value(CorrelationKind kind, std::span<const double> x,
                                          std::span<const double> y, int permutations,
                                          std::uint64_t seed) {
  check_sizes(x, y);
  if (permutations < 1) throw std::invalid_argument("permutations must be >= 1");
  const auto observed = coefficient(kind, x, y);
  if (!observed) return std::nullopt;
  const double threshold = std::fabs(*observed) - 1e-12;
  Rng rng(seed);
  std::vector<double> shuffled(y.begin(), y.end());
  int extreme = 0;
  for (int p = 0; p < permutations; ++p) {
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
    const auto r = coefficient(kind, x, shuffled);
    if (r && std::fabs(*r) >= threshold) ++extreme;
  }
  return static_cast<double>(1 + extreme) / static_cast<double>(permutations + 1);
}

std::span<const std::string> standard_qualities() {
  static const std::vector<std::string> q = {"coherence", "consistency", "fluency", "relevance"};
  return q;
}

const std::optional<CorrelationResult>& CorrelationTable::at(const std::string& quality,
                                                             CorrelationKind kind,
                                                             std::size_t measure) const {
  return cells.at(quality)[kind == CorrelationKind::Pearson ? 0 : 1].at(measure);
}

namespace {

std::string fmt(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string full(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string cell(const std::optional<CorrelationResult>& r) {
  return r ? full(r->coefficient) + "," + full(r->p_value) + "," + std::to_string(r->n) : "nan,nan,0";
}

std::string cell(const std::optional<double>& v) { return v ? full(*v) : "nan"; }

constexpr CorrelationKind kKinds[] = {CorrelationKind::Pearson, CorrelationKind::Spearman};

}  // namespace

std::string CorrelationTable::to_csv() const {
  std::string out = "quality,correlation,measure,coefficient,p_value,n\n";
  for (const auto& q : qualities)
    for (auto kind : kKinds)
      for (std::size_t m = 0; m < measures.size(); ++m)
        out += q + "," + to_string(kind) + "," + measures[m] + "," + cell(at(q, kind, m)) + "\n";
  return out;
}

std::string CorrelationTable::to_text(int precision) const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"Quality", "Correlation"};
  header.insert(header.end(), measures.begin(), measures.end());
  rows.push_back(header);
  for (const auto& q : qualities) {
    for (auto kind : kKinds) {
      std::vector<std::string> row = {kind == CorrelationKind::Pearson ? q : "", to_string(kind)};
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const auto& r = at(q, kind, m);
        row.push_back(r ? fmt(r->coefficient, precision) : "n/a");
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  auto rule = [&] {
    for (std::size_t c = 0; c < width.size(); ++c) os << (c ? "-+-" : "") << std::string(width[c], '-');
    os << '\n';
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << " | ";
      // text columns left-aligned, numbers right-aligned
      if (c < 2)
        os << std::left << std::setw(static_cast<int>(width[c])) << rows[r][c];
      else
        os << std::right << std::setw(static_cast<int>(width[c])) << rows[r][c];
    }
    os << '\n';
    if (r == 0 || (r % 2 == 0)) rule();
  }
  return os.str();
}

CorrelationTable correlation_table(std::span<const NamedScores> measures, const HumanScores& human,
                                   std::span<const std::string> qualities) {
  CorrelationTable table;
  for (const auto& m : measures) table.measures.push_back(m.label);
  for (const auto& q : qualities) {
    auto it = human.find(q);
    if (it == human.end()) {
      table.warnings.push_back("no human scores for quality \"" + q + "\"; row omitted");
      continue;
    }
    table.qualities.push_back(q);
    auto& row = table.cells[q];
    for (std::size_t k = 0; k < 2; ++k) {
      for (const auto& m : measures) {
        auto r = correlate(kKinds[k], m.values, it->second);
        if (!r)
          table.warnings.push_back(q + "/" + to_string(kKinds[k]) + "/" + m.label +
                                   ": zero variance, correlation undefined");
        row[k].push_back(r);
      }
    }
  }
  return table;
}

std::string ShiftReport::to_csv() const {
  std::string out =
      "quality,correlation,corr_a_expert,p_a_expert,n_a_expert,corr_a_turker,p_a_turker,n_a_turker,"
      "corr_b_expert,p_b_expert,n_b_expert,corr_b_turker,p_b_turker,n_b_turker,ratio_a,ratio_b,"
      "percent_change\n";
  for (const auto& c : cells) {
    out += c.quality + "," + to_string(c.kind) + "," + cell(c.a_expert) + "," + cell(c.a_turker) + "," +
           cell(c.b_expert) + "," + cell(c.b_turker) + "," + cell(c.ratio_a) + "," + cell(c.ratio_b) +
           "," + cell(c.percent_change) + "\n";
  }
  return out;
}

ShiftReport expert_turker_shift(std::span<const double> measure_a, std::span<const double> measure_b,
                                const HumanScores& expert, const HumanScores& turker,
                                std::span<const std::string> qualities) {
  ShiftReport report;
  auto ratio = [](const std::optional<CorrelationResult>& num,
                  const std::optional<CorrelationResult>& den) -> std::optional<double> {
    if (!num || !den || den->coefficient == 0.0) return std::nullopt;
    return num->coefficient / den->coefficient;
  };
  for (const auto& q : qualities) {
    auto e = expert.find(q);
    auto t = turker.find(q);
    if (e == expert.end() || t == turker.end()) {
      report.warnings.push_back("quality \"" + q + "\" missing for experts or turkers; omitted");
      continue;
    }
    for (auto kind : kKinds) {
      ShiftCell c;
      c.quality = q;
      c.kind = kind;
      c.a_expert = correlate(kind, measure_a, e->second);
      c.a_turker = correlate(kind, measure_a, t->second);
      c.b_expert = correlate(kind, measure_b, e->second);
      c.b_turker = correlate(kind, measure_b, t->second);
      c.ratio_a = ratio(c.a_expert, c.a_turker);
      c.ratio_b = ratio(c.b_expert, c.b_turker);
      if (c.ratio_a && c.ratio_b && *c.ratio_a != 0.0)
        c.percent_change = (*c.ratio_b / *c.ratio_a - 1.0) * 100.0;
      else
        report.warnings.push_back(q + "/" + to_string(kind) + ": ratio undefined");
      report.cells.push_back(std::move(c));
    }
  }
  return report;
}

MeanStderr mean_stderr(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of an empty sample");
  const auto n = static_cast<double>(values.size());
  MeanStderr out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

}  // namespace blanc::stats
