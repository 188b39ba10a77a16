/*
 * Copyright 2026 The sgmine Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Significance of mined subgroups on a holdout split: stratified
// randomization p-values, multiple-testing correction and filtering.

#ifndef SUBGROUP_STATS_HPP_
#define SUBGROUP_STATS_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/scoring.hpp"
#include "subgroup/search.hpp"

namespace subgroup {

enum class Correction { kBenjaminiYekutieli, kBonferroni, kNone };

inline std::string_view ToString(Correction c) {
  switch (c) {
    case Correction::kBenjaminiYekutieli: return "by";
    case Correction::kBonferroni: return "bonferroni";
    case Correction::kNone: return "none";
  }
  return "?";
}

inline std::optional<Correction> ParseCorrection(std::string_view text) {
  if (text == "by") return Correction::kBenjaminiYekutieli;
  if (text == "bonferroni") return Correction::kBonferroni;
  if (text == "none") return Correction::kNone;
  return std::nullopt;
}

struct SignificanceConfig {
  std::size_t n_resamples = 1000;
  Correction correction = Correction::kBenjaminiYekutieli;
  double alpha = 0.05;
  std::size_t k_prime = 100;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  // (r + 1) / (n + 1) instead of r / n.
  bool plus_one = false;
  std::size_t threads = 1;

  void Validate() const {
    if (n_resamples < 1) throw InvalidArgument("n_resamples must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("significance level must be in (0,1)");
    if (k < 1 || k > k_prime) throw InvalidArgument("need 1 <= k <= k'");
    if (threads < 1) throw InvalidArgument("threads must be >= 1");
  }
};

// splitmix64 finalizer; used to derive independent RNG substreams.
inline std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t PatternStreamSeed(std::uint64_t seed, const Pattern& p) {
  std::uint64_t h = Mix64(seed);
  for (Pattern::Id id : p.ids()) h = Mix64(h ^ (std::uint64_t{id} + 1));
  return h;
}

struct PValue {
  double p = 1.0;
  bool testable = false;
  std::size_t at_least_as_extreme = 0;
  std::size_t resamples = 0;
  double statistic = 0.0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

// Randomization test of one cover on a dataset: the statistic is the
// unweighted relative score of the cover; the null distribution comes from
// random subsets drawn without replacement with the cover's exact positive
// and negative counts. p = (#draws scoring >= statistic) / #draws.
inline PValue EmpiricalPValue(const Cover& c, const Dataset& ds, Measure measure,
                              Direction direction, std::size_t n_resamples,
                              std::uint64_t stream_seed, bool plus_one = false) {
  PValue out;
  out.positives = c.positives();
  out.negatives = c.negatives();
  if (c.size() == 0 || !IsDefined(measure, c.positives(), c.negatives()) ||
      !IsDefined(measure, ds.positives(), ds.negatives()) ||
      c.positives() > ds.positives() || c.negatives() > ds.negatives()) {
    return out;
  }
  ScoringSpec spec;
  spec.measure = measure;
  spec.direction = direction;
  const Scorer scorer(ds, spec);
  out.testable = true;
  out.statistic = scorer.Relative(c);

  // Ranks (positions in decreasing score order) of each class.
  std::vector<std::uint32_t> pos_ranks;
  std::vector<std::uint32_t> neg_ranks;
  const auto order = ds.rank_order();
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    (ds.label(order[r]) ? pos_ranks : neg_ranks).push_back(r);
  }

  std::mt19937_64 rng(stream_seed);
  std::vector<std::uint32_t> sample;
  std::vector<std::uint8_t> marked;
  std::vector<TieGroup> groups;
  auto draw = [&](std::vector<std::uint32_t>& pool, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      sample.push_back(pool[i]);
    }
  };
  auto add = [&](std::uint32_t rank, std::size_t& sampled_pos) {
    const std::uint32_t idx = order[rank];
    const double score = ds.prediction(idx);
    if (groups.empty() || groups.back().score != score) groups.push_back({score, 0, 0});
    if (ds.label(idx)) {
      ++groups.back().positives;
      ++sampled_pos;
    } else {
      ++groups.back().negatives;
    }
  };
  // Large samples are put in rank order by marking instead of sorting.
  const bool use_marks = c.size() * 16 > order.size();
  if (use_marks) marked.assign(order.size(), 0);
  const double tolerance = 1e-12 * std::max(1.0, std::abs(out.statistic));
  for (std::size_t draw_index = 0; draw_index < n_resamples; ++draw_index) {
    sample.clear();
    groups.clear();
    draw(pos_ranks, c.positives());
    draw(neg_ranks, c.negatives());
    std::size_t sampled_pos = 0;
    std::size_t sampled = 0;
    if (use_marks) {
      for (std::uint32_t r : sample) marked[r] = 1;
      for (std::uint32_t r = 0; r < order.size(); ++r) {
        if (marked[r] == 0) continue;
        marked[r] = 0;
        add(r, sampled_pos);
        ++sampled;
      }
    } else {
      std::sort(sample.begin(), sample.end());
      for (std::uint32_t r : sample) {
        add(r, sampled_pos);
        ++sampled;
      }
    }
    if (sampled_pos != c.positives() || sampled != c.size()) {
      throw std::logic_error("stratified resample changed class counts");
    }
    if (scorer.RelativeFromGroups(groups) >= out.statistic - tolerance) {
      ++out.at_least_as_extreme;
    }
  }
  out.resamples = n_resamples;
  out.p = plus_one ? static_cast<double>(out.at_least_as_extreme + 1) /
                         static_cast<double>(n_resamples + 1)
                   : static_cast<double>(out.at_least_as_extreme) /
                         static_cast<double>(n_resamples);
  return out;
}

// p-value of a pattern evaluated on a validation split. The index must wrap
// the validation dataset with the selector list used during search.
inline PValue empirical_p_value(const Pattern& p, const SelectorIndex& validation,
                                const ScoringSpec& spec, const SignificanceConfig& cfg) {
  return EmpiricalPValue(validation.CoverOf(p), validation.dataset(), spec.measure,
                         spec.direction, cfg.n_resamples, PatternStreamSeed(cfg.seed, p),
                         cfg.plus_one);
}

// Benjamini-Yekutieli step-up adjustment: sorted ascending,
// adj_(i) = min_{j >= i} p_(j) * m * c(m) / j with c(m) = sum_{k<=m} 1/k,
// clipped to 1. Output is in input order.
inline std::vector<double> by_correct(std::span<const double> pvalues) {
  const std::size_t m = pvalues.size();
  std::vector<double> adjusted(m);
  if (m == 0) return adjusted;
  double harmonic = 0.0;
  for (std::size_t k = 1; k <= m; ++k) harmonic += 1.0 / static_cast<double>(k);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });
  const double factor = static_cast<double>(m) * harmonic;
  double running = 1.0;
  for (std::size_t rank = m; rank >= 1; --rank) {
    const std::size_t idx = order[rank - 1];
    running = std::min(running, pvalues[idx] * factor / static_cast<double>(rank));
    adjusted[idx] = std::min(1.0, running);
  }
  return adjusted;
}

inline std::vector<double> bonferroni_correct(std::span<const double> pvalues) {
  std::vector<double> adjusted;
  adjusted.reserve(pvalues.size());
  for (double p : pvalues) {
    adjusted.push_back(std::min(1.0, p * static_cast<double>(pvalues.size())));
  }
  return adjusted;
}

inline std::vector<double> Correct(std::span<const double> pvalues, Correction c) {
  switch (c) {
    case Correction::kBenjaminiYekutieli: return by_correct(pvalues);
    case Correction::kBonferroni: return bonferroni_correct(pvalues);
    case Correction::kNone: return {pvalues.begin(), pvalues.end()};
  }
  return {};
}

struct SignificanceEntry {
  ScoredPattern pattern;
  PValue raw;
  double adjusted = 1.0;
  bool significant = false;
};

struct SignificanceReport {
  // One entry per candidate, in the candidates' rank order.
  std::vector<SignificanceEntry> entries;
  ResultSet filtered;
  std::size_t candidates = 0;
  std::size_t significant = 0;
  std::size_t untestable = 0;
};

// Tests every candidate on the validation split, corrects jointly (untestable
// candidates enter with p = 1) and keeps the k best significant ones in their
// original order.
inline SignificanceReport significance_filter(const ResultSet& candidates,
                                              const SelectorIndex& validation,
                                              const ScoringSpec& spec,
                                              const SignificanceConfig& cfg) {
  cfg.Validate();
  SignificanceReport report;
  report.candidates = candidates.size();
  report.entries.resize(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    report.entries[i].pattern = candidates.patterns[i];
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < report.entries.size(); i = next++) {
      report.entries[i].raw =
          empirical_p_value(report.entries[i].pattern.pattern, validation, spec, cfg);
    }
  };
  if (cfg.threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < cfg.threads; ++t) pool.emplace_back(work);
  }

  std::vector<double> raw;
  raw.reserve(report.entries.size());
  for (const auto& e : report.entries) raw.push_back(e.raw.testable ? e.raw.p : 1.0);
  const std::vector<double> adjusted = Correct(raw, cfg.correction);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    SignificanceEntry& e = report.entries[i];
    e.adjusted = adjusted[i];
    e.significant = e.raw.testable && e.adjusted <= cfg.alpha;
    if (!e.raw.testable) ++report.untestable;
    if (e.significant) {
      ++report.significant;
      if (report.filtered.size() < cfg.k) report.filtered.patterns.push_back(e.pattern);
    }
  }
  report.filtered.stats = candidates.stats;
  return report;
}

}  // namespace subgroup

#endif  // SUBGROUP_STATS_HPP_
