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

// Interestingness of a subgroup: how much worse (or better) the classifier
// ranks on the subgroup than on the whole dataset, optionally weighted by
// cover size and class balance and adjusted for generalizations.

#ifndef SUBGROUP_SCORING_HPP_
#define SUBGROUP_SCORING_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/metrics.hpp"

namespace subgroup {

enum class Measure { kArl, kRocAuc, kPrAuc };

// kUnder ranks subgroups where the model is worse than overall first.
enum class Direction { kUnder, kOver };

inline std::string_view ToString(Measure m) {
  switch (m) {
    case Measure::kArl: return "arl";
    case Measure::kRocAuc: return "roc_auc";
    case Measure::kPrAuc: return "pr_auc";
  }
  return "?";
}

inline std::optional<Measure> ParseMeasure(std::string_view text) {
  if (text == "arl") return Measure::kArl;
  if (text == "roc_auc" || text == "roc") return Measure::kRocAuc;
  if (text == "pr_auc" || text == "pr") return Measure::kPrAuc;
  return std::nullopt;
}

inline std::string_view ToString(Direction d) {
  return d == Direction::kUnder ? "under" : "over";
}

struct ScoringSpec {
  Measure measure = Measure::kRocAuc;
  double alpha = 0.0;
  double beta = 0.0;
  bool generalization_aware = false;
  Direction direction = Direction::kUnder;

  void Validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) throw InvalidArgument("alpha must be finite and >= 0");
    if (!std::isfinite(beta) || beta < 0.0) throw InvalidArgument("beta must be finite and >= 0");
  }
};

// ARL and PR AUC need a positive; ROC AUC needs both classes.
inline bool IsDefined(Measure m, std::size_t positives, std::size_t negatives) {
  if (m == Measure::kRocAuc) return positives > 0 && negatives > 0;
  return positives > 0;
}

inline double EvaluateGroups(Measure m, std::span<const TieGroup> groups) {
  switch (m) {
    case Measure::kArl: return ranked::Arl(groups);
    case Measure::kRocAuc: return ranked::RocAuc(groups);
    case Measure::kPrAuc: return ranked::PrAuc(groups);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double Evaluate(Measure m, const LabeledScoreSet& s) {
  switch (m) {
    case Measure::kArl: return arl(s);
    case Measure::kRocAuc: return roc_auc(s);
    case Measure::kPrAuc: return pr_auc(s);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Signed difference between a subgroup's metric and the reference metric;
// positive means the subgroup deviates in the searched direction. ARL is a
// loss, the AUCs are gains, hence the opposite operand order.
inline double RelativeDifference(Measure m, Direction d, double subgroup_metric,
                                 double reference_metric) {
  const double under = m == Measure::kArl ? subgroup_metric - reference_metric
                                          : reference_metric - subgroup_metric;
  return d == Direction::kUnder ? under : -under;
}

// Base metrics of a cover, NaN where undefined. Reported next to each result.
struct Diagnostics {
  double arl = std::numeric_limits<double>::quiet_NaN();
  double roc_auc = std::numeric_limits<double>::quiet_NaN();
  double pr_auc = std::numeric_limits<double>::quiet_NaN();
  std::size_t cover_size = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  double ncr = 0.0;
  // Value of the scored measure (one of the three above).
  double metric = std::numeric_limits<double>::quiet_NaN();
};

struct ScoredPattern {
  Pattern pattern;
  std::string description;
  double interestingness = 0.0;
  // Size/balance-weighted score before the generalization adjustment.
  double weighted_score = 0.0;
  Diagnostics diagnostics;
};

// Result order: interestingness descending, then shorter patterns, then
// lexicographic selector ids.
inline bool RanksBefore(const ScoredPattern& a, const ScoredPattern& b) {
  if (a.interestingness != b.interestingness) return a.interestingness > b.interestingness;
  if (a.pattern.size() != b.pattern.size()) return a.pattern.size() < b.pattern.size();
  return a.pattern < b.pattern;
}

// Scores covers of one dataset under one spec. Caches the whole-dataset
// metric.
class Scorer {
 public:
  Scorer(const Dataset& ds, const ScoringSpec& spec) : ds_(&ds), spec_(spec) {
    spec_.Validate();
    if (!IsDefined(spec.measure, ds.positives(), ds.negatives())) {
      throw UndefinedMeasure(std::string(ToString(spec.measure)) +
                             " is undefined on the whole dataset");
    }
    full_metric_ = EvaluateGroups(spec.measure, RankedGroups(Cover::All(ds), ds));
  }

  const Dataset& dataset() const noexcept { return *ds_; }
  const ScoringSpec& spec() const noexcept { return spec_; }
  double full_metric() const noexcept { return full_metric_; }

  bool Defined(const Cover& c) const {
    return IsDefined(spec_.measure, c.positives(), c.negatives());
  }

  double RelativeFromGroups(std::span<const TieGroup> groups) const {
    return RelativeDifference(spec_.measure, spec_.direction,
                              EvaluateGroups(spec_.measure, groups), full_metric_);
  }

  double Relative(const Cover& c) const {
    if (!Defined(c)) {
      throw UndefinedMeasure(std::string(ToString(spec_.measure)) +
                             " is undefined on this cover");
    }
    return RelativeFromGroups(RankedGroups(c, *ds_));
  }

  double Weight(const Cover& c) const {
    return weight(c.positives(), c.negatives(), spec_.alpha, spec_.beta);
  }

  double Weighted(const Cover& c) const { return Weight(c) * Relative(c); }

  Diagnostics Diagnose(const Cover& c) const {
    Diagnostics d;
    d.cover_size = c.size();
    d.positives = c.positives();
    d.negatives = c.negatives();
    d.ncr = c.ncr();
    const auto groups = RankedGroups(c, *ds_);
    if (c.positives() > 0) {
      d.arl = ranked::Arl(groups);
      d.pr_auc = ranked::PrAuc(groups);
      if (c.negatives() > 0) d.roc_auc = ranked::RocAuc(groups);
    }
    switch (spec_.measure) {
      case Measure::kArl: d.metric = d.arl; break;
      case Measure::kRocAuc: d.metric = d.roc_auc; break;
      case Measure::kPrAuc: d.metric = d.pr_auc; break;
    }
    return d;
  }

 private:
  const Dataset* ds_;
  ScoringSpec spec_;
  double full_metric_ = 0.0;
};

// Metric difference between the pattern's cover and the whole dataset.
inline double relative_score(const Pattern& p, const SelectorIndex& index,
                             Measure measure, Direction direction = Direction::kUnder) {
  ScoringSpec spec;
  spec.measure = measure;
  spec.direction = direction;
  return Scorer(index.dataset(), spec).Relative(index.CoverOf(p));
}

inline double weighted_score(const Pattern& p, const SelectorIndex& index,
                             const ScoringSpec& spec) {
  return Scorer(index.dataset(), spec).Weighted(index.CoverOf(p));
}

// Weighted scores of generalizations, keyed by pattern.
using GeneralizationScores = std::map<Pattern, double>;

// Weighted score minus the best weighted score among all strict
// generalizations. gen_scores must hold every strict generalization,
// including the empty pattern.
inline double gen_aware_score(double weighted, const Pattern& p,
                              const GeneralizationScores& gen_scores) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Pattern& h : p.Generalizations()) {
    auto it = gen_scores.find(h);
    if (it == gen_scores.end()) {
      throw std::logic_error("generalization score missing from cache");
    }
    best = std::max(best, it->second);
  }
  return weighted - best;
}

inline double gen_aware_score(const Pattern& p, const SelectorIndex& index,
                              const ScoringSpec& spec,
                              const GeneralizationScores& gen_scores) {
  return gen_aware_score(weighted_score(p, index, spec), p, gen_scores);
}

// Weighted score used for generalizations: 0 where the measure is undefined.
inline double GeneralizationScore(const Scorer& scorer, const Cover& c) {
  return scorer.Defined(c) ? scorer.Weighted(c) : 0.0;
}

}  // namespace subgroup

#endif  // SUBGROUP_SCORING_HPP_
