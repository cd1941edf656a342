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


// Acceptance gate: one PASS/FAIL line per primary criterion. Exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "blanc/engine.hpp"
#include "blanc/masking.hpp"
#include "blanc/reference_backend.hpp"
#include "blanc/restriction.hpp"
#include "blanc/score_cache.hpp"
#include "blanc/stats.hpp"
#include "blanc/sweep.hpp"
#include "oracle/oracle.hpp"
#include "support/synthetic.hpp"

namespace {

using namespace blanc;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Verdict masking_coverage() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const int thresholds[] = {1, 4, 5, 6, 100};
  long schedules = 0;
  for (int len = 1; len <= 64; ++len) {
    // Words of one to three pieces with piece lengths cycling through 1..10.
    Sentence s;
    for (int j = 0, word = 0; j < len; ++word) {
      const int pieces = std::min(1 + word % 3, len - j);
      for (int k = 0; k < pieces; ++k, ++j) {
        const auto kind = pieces == 1 ? TokenKind::Normal : k == 0 ? TokenKind::Lead : TokenKind::Follow;
        s.push_back(make_token(std::string(1 + (j * 7) % 10, 'm'), kind, j));
      }
    }
    for (int gap = 1; gap <= 6; ++gap)
      for (int gm = 1; gm <= gap; ++gm)
        for (int ln : thresholds)
          for (int ll : thresholds)
            for (int lf : thresholds) {
              const MaskingPolicy p{gap, gm, {ln, ll, lf}};
              const auto sched = even_schedule(s, p);
              ++schedules;
              if (static_cast<int>(sched.passes.size()) != gap) {
                v.require(false, "wrong pass count");
                return v;
              }
              std::vector<int> seen(len, 0);
              for (const auto& pass : sched.passes)
                for (int j : pass) ++seen[j];
              for (int j = 0; j < len; ++j)
                if (seen[j] != (is_eligible(s[j], p) ? gm : 0)) {
                  std::ostringstream os;
                  os << "len " << len << " gap " << gap << "/" << gm << " position " << j;
                  v.require(false, os.str());
                  return v;
                }
            }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < 5.0, "took " + std::to_string(seconds) + " s");
  v.detail = v.ok ? std::to_string(schedules) + " schedules in " + std::to_string(seconds) + " s" : v.detail;
  return v;
}

Verdict metric_identity() {
  Verdict v;
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::int64_t> d(0, 5000);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    CountMatrix m{d(rng), d(rng), d(rng), d(rng)};
    const double n = static_cast<double>(m.total());
    const double diff = std::abs(m.score() - (static_cast<double>(m.assisted_correct()) / n -
                                               static_cast<double>(m.base_correct()) / n));
    worst = std::max(worst, diff);
  }
  v.require(worst <= 4 * std::numeric_limits<double>::epsilon(), "max deviation " + std::to_string(worst));
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  ReferenceBackend backend(blanc_test::micro_backend_options());
  blanc_oracle::Model model;
  model.base = backend.base_counts();
  model.filler = backend.special_ids().filler;
  int compared = 0;
  for (int i = 0; i < 20; ++i) {
    const auto m = blanc_test::micro_case(i);
    const auto text = blanc_oracle::lines_of(m.text), summary = blanc_oracle::lines_of(m.summary);
    for (const auto& c : blanc_test::micro_configs()) {
      const auto& t = c.masking.min_len;
      const blanc_oracle::Thresholds th{t.normal, t.lead, t.follow};
      const auto o = c.family == Family::Help
                         ? blanc_oracle::help(text, summary, c.masking.gap, c.masking.gap_mask, th, model)
                         : blanc_oracle::tune_even(text, summary, c.masking.gap, c.masking.gap_mask, th,
                                                   c.tuning->gap_tune, c.tuning->gap_mask_tune,
                                                   {c.tuning->min_len.normal, c.tuning->min_len.lead,
                                                    c.tuning->min_len.follow},
                                                   model);
      const auto r = evaluate(m.text, m.summary, c, backend);
      bool same = r.score == o.score && r.per_sentence.size() == o.per_sentence.size();
      for (std::size_t s = 0; same && s < r.per_sentence.size(); ++s) {
        const auto& b = o.per_sentence[s];
        same = r.per_sentence[s] == CountMatrix{b.k00, b.k01, b.k10, b.k11};
      }
      v.require(same, "case " + std::to_string(i) + " config " + c.label);
      ++compared;
    }
  }
  if (v.ok) v.detail = std::to_string(compared) + " case/config pairs";
  return v;
}

Verdict empty_summary_zero() {
  Verdict v;
  ReferenceBackend backend;
  MeasureConfig all = help_max_help();
  all.masking.min_len = {1, 1, 1};
  std::int64_t masked = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::string text;
    for (int k = 0; k < 1 + static_cast<int>(i % 4); ++k) text += blanc_test::random_sentence(i * 10 + k, 4 + k) + " ";
    const auto tokens = tokenize_text(text, backend);
    for (const auto& c : {help_max_help(), all}) {
      const auto r = blanc_help(tokens, {}, c, backend);
      v.require(r.score == 0.0 && r.counts.k01 == r.counts.k10, "text " + std::to_string(i));
      masked += r.counts.total();
    }
  }
  if (v.ok) v.detail = std::to_string(masked) + " masked tokens";
  return v;
}

Verdict correlation_exactness() {
  Verdict v;
  int checked = 0;
  auto check_all = [&](std::vector<double> x, std::vector<double> y) {
    std::sort(y.begin(), y.end());
    do {
      const auto r = stats::spearman(x, y);
      const double expected = blanc_oracle::spearman(x, y);
      // A constant input has no defined coefficient.
      v.require(std::isnan(expected) ? !r : r && std::abs(r->coefficient - expected) <= 1e-12,
                "spearman mismatch at n = " + std::to_string(x.size()));
      ++checked;
    } while (std::next_permutation(y.begin(), y.end()));
  };
  for (int n = 3; n <= 6; ++n) {
    std::vector<double> x(n);
    std::iota(x.begin(), x.end(), 1.0);
    check_all(x, x);
    std::vector<double> tied = x;
    tied[1] = tied[0];
    tied[n - 1] = tied[n - 2];
    check_all(x, tied);
    check_all(tied, tied);
  }
  const auto p = stats::pearson(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4});
  v.require(p && p->coefficient == 0.8, "pearson example");
  if (v.ok) v.detail = std::to_string(checked) + " permutations";
  return v;
}

Verdict max_help_universality() {
  Verdict v;
  blanc_test::SyntheticSpec high, low;
  high.samples = low.samples = 200;
  high.overlap = 0.9;
  high.seed = 101;
  low.overlap = 0.2;
  low.seed = 202;
  const std::vector<Corpus> corpora = {blanc_test::synthetic_corpus("high-overlap", high),
                                       blanc_test::synthetic_corpus("low-overlap", low)};
  const auto family = builtin_family("help-perturbation");
  const auto dir = std::filesystem::temp_directory_path() / "blanc_acceptance_cache";
  std::filesystem::remove_all(dir);

  ReferenceBackend inner;
  SweepReport first, second;
  {
    ScoreCache cache(dir);
    CountingBackend backend(inner);
    first = max_help_select(corpora, family, backend, {&cache, 4});
  }
  std::uint64_t rerun_calls = 0;
  {
    ScoreCache cache(dir);
    CountingBackend backend(inner);
    second = max_help_select(corpora, family, backend, {&cache, 4});
    rerun_calls = backend.model_calls() + backend.tokenize_calls();
  }
  std::filesystem::remove_all(dir);

  // The enumerator must agree with the means before the argmax is trusted.
  blanc_oracle::Model model;
  model.base = inner.base_counts();
  model.filler = inner.special_ids().filler;
  for (const auto& corpus : corpora)
    for (const auto& c : family) {
      double sum = 0;
      for (const auto& s : corpus.samples) {
        const auto& t = c.masking.min_len;
        sum += blanc_oracle::help(blanc_oracle::lines_of(tokenize_text(s.text, inner)),
                                  blanc_oracle::lines_of(tokenize_text(s.summary, inner)), c.masking.gap,
                                  c.masking.gap_mask, {t.normal, t.lead, t.follow}, model)
                   .score;
      }
      v.require(std::abs(sum / corpus.samples.size() - first.row(corpus.id, c.label).mean) < 1e-12,
                "enumerator disagrees on " + corpus.id + "/" + c.label);
    }

  v.require(first.optima.size() == 2 && first.universal, "argmax differs across corpora");
  v.require(first.optima[0].tied.size() == 1, "argmax decided by a tie");
  v.require(rerun_calls == 0, std::to_string(rerun_calls) + " backend calls on cached rerun");
  v.require(first.to_csv() == second.to_csv(), "cached rerun changed the report");
  if (v.ok) {
    std::ostringstream os;
    os << "argmax \"" << first.optima[0].label << "\" on both; means " << first.row("high-overlap", first.optima[0].label).mean
       << " / " << first.row("low-overlap", first.optima[0].label).mean;
    v.detail = os.str();
  }
  return v;
}

Verdict restriction_machinery() {
  Verdict v;
  ReferenceBackend backend;
  blanc_test::SyntheticSpec spec;
  spec.samples = 50;
  spec.seed = 77;
  const auto corpus = blanc_test::synthetic_corpus("restrict", spec);
  for (const auto& c : {help_max_help(), help_max_human(), tune_max_human()}) {
    const auto ev = evaluate_config(corpus, c, backend);
    for (const auto& s : ev.samples) {
      std::vector<std::size_t> all(s.result->per_sentence.size());
      std::iota(all.begin(), all.end(), 0);
      v.require(restricted_blanc(*s.result, all, Aggregation::RecomputeCombined) == s.result->score,
                "full selection differs for " + s.sample_id);
    }
  }
  // Spearman 0.2 (sum d^2 = 16) and 0.3 (sum d^2 = 14) against human ranks 1..5.
  const std::vector<double> full = {0.10, 0.40, 0.50, 0.20, 0.30};
  const std::vector<double> restricted = {0.11, 0.23, 0.35, 0.29, 0.17};
  const stats::HumanScores human = {{"relevance", {1, 2, 3, 4, 5}}};
  const auto gain = correlation_gain(full, restricted, human);
  v.require(gain.size() == 1 && gain[0].factor, "factor undefined");
  if (v.ok) {
    v.require(std::abs(gain[0].full->coefficient - 0.2) < 1e-12, "baseline rho");
    v.require(std::abs(*gain[0].factor - 1.5) < 1e-12, "factor " + std::to_string(*gain[0].factor));
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"masking-coverage", masking_coverage},
      {"metric-identity", metric_identity},
      {"oracle-equivalence", oracle_equivalence},
      {"empty-summary-zero", empty_summary_zero},
      {"correlation-exactness", correlation_exactness},
      {"max-help-universality", max_help_universality},
      {"restriction-machinery", restriction_machinery},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += !v.ok;
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
