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

// Optimistic estimates: upper bounds on the score of every subset of a cover,
// used to cut whole branches of the pattern lattice.
//
// Base bounds (all tight, i.e. attained by some subset):
//   ARL      max over subsets = largest PEN of any positive
//   ROC AUC  min over subsets = 1 / 0.5 / 0 depending on whether the ranking
//            is strictly separating / separating up to ties / inverted
//   PR AUC   min over subsets = PR AUC of {lowest positive} U {negatives}
//   weight   max over subsets = (2 min(P, N))^alpha when 0 < alpha <= beta

#ifndef SUBGROUP_BOUNDS_HPP_
#define SUBGROUP_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/metrics.hpp"
#include "subgroup/scoring.hpp"

namespace subgroup {

namespace ranked {

// Extreme scores per class; callers guarantee the class is present.
inline double LowestPositive(std::span<const TieGroup> groups) {
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (it->positives > 0) return it->score;
  }
  return std::numeric_limits<double>::quiet_NaN();
}
inline double HighestPositive(std::span<const TieGroup> groups) {
  for (const TieGroup& g : groups) {
    if (g.positives > 0) return g.score;
  }
  return std::numeric_limits<double>::quiet_NaN();
}
inline double LowestNegative(std::span<const TieGroup> groups) {
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (it->negatives > 0) return it->score;
  }
  return std::numeric_limits<double>::quiet_NaN();
}
inline double HighestNegative(std::span<const TieGroup> groups) {
  for (const TieGroup& g : groups) {
    if (g.negatives > 0) return g.score;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double LowerBoundRocAuc(std::span<const TieGroup> groups) {
  const double min_pos = LowestPositive(groups);
  const double max_neg = HighestNegative(groups);
  if (min_pos > max_neg) return 1.0;
  if (min_pos == max_neg) return 0.5;
  return 0.0;
}

// Mirror image of LowerBoundRocAuc: the best any subset can reach.
inline double UpperBoundRocAuc(std::span<const TieGroup> groups) {
  const double max_pos = HighestPositive(groups);
  const double min_neg = LowestNegative(groups);
  if (max_pos > min_neg) return 1.0;
  if (max_pos == min_neg) return 0.5;
  return 0.0;
}

// PR AUC of exactly one lowest-scored positive together with all negatives.
inline double LowerBoundPrAuc(std::span<const TieGroup> groups) {
  const double min_pos = LowestPositive(groups);
  std::vector<TieGroup> worst;
  worst.reserve(groups.size());
  for (const TieGroup& g : groups) {
    const std::size_t pos = g.score == min_pos ? 1 : 0;
    if (pos + g.negatives > 0) worst.push_back(TieGroup{g.score, pos, g.negatives});
  }
  return PrAuc(worst);
}

}  // namespace ranked

// Largest PEN among the positives minus the whole-dataset ARL.
inline double oe_arl(const LabeledScoreSet& s, double arl_full) {
  if (s.positives() == 0) throw UndefinedMeasure("ARL estimate needs a positive");
  return ranked::MaxPenalty(RankGroups(s)) - arl_full;
}

inline double lb_roc_auc(const LabeledScoreSet& s) {
  if (s.positives() == 0 || s.negatives() == 0) {
    throw UndefinedMeasure("ROC AUC bound needs both classes");
  }
  return ranked::LowerBoundRocAuc(RankGroups(s));
}

inline double lb_pr_auc(const LabeledScoreSet& s) {
  if (s.positives() == 0) throw UndefinedMeasure("PR AUC bound needs a positive");
  return ranked::LowerBoundPrAuc(RankGroups(s));
}

// Upper bound of |I|^alpha * cb(I)^beta over all subsets I. Tight when
// 0 < alpha <= beta or alpha = beta = 0; otherwise the size term alone
// (cb <= 1), which is sound but not tight.
inline double ub_weight(std::size_t positives, std::size_t negatives, double alpha,
                        double beta) {
  if (alpha == 0.0 && beta == 0.0) return 1.0;
  if (alpha > 0.0 && alpha <= beta) {
    return std::pow(2.0 * static_cast<double>(std::min(positives, negatives)), alpha);
  }
  return alpha == 0.0 ? 1.0 : std::pow(static_cast<double>(positives + negatives), alpha);
}

inline double ub_weight(const LabeledScoreSet& s, double alpha, double beta) {
  return ub_weight(s.positives(), s.negatives(), alpha, beta);
}

inline bool WeightBoundIsTight(double alpha, double beta) {
  return (alpha == 0.0 && beta == 0.0) || (alpha > 0.0 && alpha <= beta);
}

// Upper bound of the unweighted relative score over all subsets of a cover
// whose measure is defined. May be negative.
inline double BaseEstimate(Measure m, Direction d, std::span<const TieGroup> groups,
                           double full_metric) {
  if (d == Direction::kUnder) {
    switch (m) {
      case Measure::kArl: return ranked::MaxPenalty(groups) - full_metric;
      case Measure::kRocAuc: return full_metric - ranked::LowerBoundRocAuc(groups);
      case Measure::kPrAuc: return full_metric - ranked::LowerBoundPrAuc(groups);
    }
  } else {
    switch (m) {
      // A lone positive has ARL 0.
      case Measure::kArl: return full_metric;
      case Measure::kRocAuc: return ranked::UpperBoundRocAuc(groups) - full_metric;
      // A lone positive already reaches PR AUC 1.
      case Measure::kPrAuc: return 1.0 - full_metric;
    }
  }
  return std::numeric_limits<double>::infinity();
}

// Weight bound times the base estimate clamped at zero. groups describe the
// cover, which must satisfy the measure's definedness constraint.
inline double OptimisticEstimate(const Scorer& scorer, std::span<const TieGroup> groups,
                                 std::size_t positives, std::size_t negatives) {
  const ScoringSpec& spec = scorer.spec();
  const double base =
      BaseEstimate(spec.measure, spec.direction, groups, scorer.full_metric());
  return ub_weight(positives, negatives, spec.alpha, spec.beta) * std::max(0.0, base);
}

inline double optimistic_estimate(const Scorer& scorer, const Cover& c) {
  if (!scorer.Defined(c)) {
    throw UndefinedMeasure("optimistic estimate on a cover with undefined measure");
  }
  return OptimisticEstimate(scorer, RankedGroups(c, scorer.dataset()), c.positives(),
                            c.negatives());
}

inline double optimistic_estimate(const Pattern& p, const SelectorIndex& index,
                                  const ScoringSpec& spec) {
  return optimistic_estimate(Scorer(index.dataset(), spec), index.CoverOf(p));
}

}  // namespace subgroup

#endif  // SUBGROUP_BOUNDS_HPP_
