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

// Rank-based performance kernels for soft binary classifiers.
//
// All measures here depend on the scores only through their order, so every
// kernel is first expressed over "tie groups": maximal runs of equal score,
// listed by decreasing score, each carrying its positive and negative count.
// Supporting points of the ROC and PR curves are the cumulative counts after
// 0, 1, ..., G groups, which is exactly the set produced by the thresholds
// {unique scores} U {-inf} under strict `score > t` counting.

#ifndef SUBGROUP_METRICS_HPP_
#define SUBGROUP_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "subgroup/error.hpp"

namespace subgroup {

// Multiset of (label, score) pairs. Order carries no meaning to any metric.
class LabeledScoreSet {
 public:
  LabeledScoreSet() = default;

  LabeledScoreSet(std::vector<std::uint8_t> labels, std::vector<double> scores)
      : labels_(std::move(labels)), scores_(std::move(scores)) {
    if (labels_.size() != scores_.size()) {
      throw InvalidArgument("labels and scores differ in length");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] > 1) throw InvalidArgument("label outside {0,1}");
      if (!std::isfinite(scores_[i])) throw InvalidArgument("non-finite score");
      positives_ += labels_[i];
    }
  }

  // Convenience for tests and examples: {{1, 0.9}, {0, 0.8}, ...}.
  LabeledScoreSet(std::initializer_list<std::pair<int, double>> pairs) {
    labels_.reserve(pairs.size());
    scores_.reserve(pairs.size());
    for (const auto& [label, score] : pairs) push_back(label != 0, score);
  }

  void push_back(bool label, double score) {
    if (!std::isfinite(score)) throw InvalidArgument("non-finite score");
    labels_.push_back(label ? 1 : 0);
    scores_.push_back(score);
    positives_ += label ? 1 : 0;
  }

  void reserve(std::size_t n) {
    labels_.reserve(n);
    scores_.reserve(n);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t positives() const noexcept { return positives_; }
  std::size_t negatives() const noexcept { return size() - positives_; }

  bool label(std::size_t i) const { return labels_[i] != 0; }
  double score(std::size_t i) const { return scores_[i]; }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }
  std::span<const double> scores() const noexcept { return scores_; }

 private:
  std::vector<std::uint8_t> labels_;
  std::vector<double> scores_;
  std::size_t positives_ = 0;
};

// A maximal run of instances sharing one score.
struct TieGroup {
  double score = 0.0;
  std::size_t positives = 0;
  std::size_t negatives = 0;

  friend bool operator==(const TieGroup&, const TieGroup&) = default;
};

// Collapses a score set into tie groups ordered by decreasing score.
inline std::vector<TieGroup> RankGroups(const LabeledScoreSet& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.score(a) > s.score(b);
  });
  std::vector<TieGroup> groups;
  for (std::size_t idx : order) {
    if (groups.empty() || groups.back().score != s.score(idx)) {
      groups.push_back(TieGroup{s.score(idx), 0, 0});
    }
    if (s.label(idx)) {
      ++groups.back().positives;
    } else {
      ++groups.back().negatives;
    }
  }
  return groups;
}

// Kernels over tie groups sorted by decreasing score. Callers guarantee the
// definedness constraints; these functions do not re-check them.
namespace ranked {

struct Totals {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

inline Totals Count(std::span<const TieGroup> groups) {
  Totals t;
  for (const TieGroup& g : groups) {
    t.positives += g.positives;
    t.negatives += g.negatives;
  }
  return t;
}

// Sum of PEN over all positives, doubled so that it stays integral.
inline std::uint64_t DoubledPenaltySum(std::span<const TieGroup> groups) {
  std::uint64_t sum = 0;
  std::uint64_t negatives_above = 0;
  for (const TieGroup& g : groups) {
    sum += g.positives * (2 * negatives_above + g.negatives);
    negatives_above += g.negatives;
  }
  return sum;
}

inline double Arl(std::span<const TieGroup> groups) {
  const Totals t = Count(groups);
  return static_cast<double>(DoubledPenaltySum(groups)) /
         (2.0 * static_cast<double>(t.positives));
}

// PEN grows as the score falls, so the maximum sits in the last group that
// holds a positive.
inline double MaxPenalty(std::span<const TieGroup> groups) {
  std::uint64_t negatives_above = 0;
  double best = 0.0;
  for (const TieGroup& g : groups) {
    if (g.positives > 0) {
      best = static_cast<double>(2 * negatives_above + g.negatives) / 2.0;
    }
    negatives_above += g.negatives;
  }
  return best;
}

inline double RocAuc(std::span<const TieGroup> groups) {
  // Trapezoid from (FP, TP) to (FP + n_g, TP + p_g) has doubled area
  // n_g * (2 TP + p_g), an integer.
  std::uint64_t doubled_area = 0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (const TieGroup& g : groups) {
    doubled_area += g.negatives * (2 * tp + g.positives);
    tp += g.positives;
    fp += g.negatives;
  }
  const long double denom = 2.0L * static_cast<long double>(tp) *
                            static_cast<long double>(fp);
  return static_cast<double>(static_cast<long double>(doubled_area) / denom);
}

// Precision with the empty prediction set counted as perfectly precise.
inline long double Precision(std::uint64_t tp, std::uint64_t fp) {
  if (tp + fp == 0) return 1.0L;
  return static_cast<long double>(tp) / static_cast<long double>(tp + fp);
}

// Area under the linearly interpolated PR curve (trapezoid rule in recall).
inline double PrAuc(std::span<const TieGroup> groups) {
  long double area = 0.0L;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  long double previous = Precision(0, 0);
  for (const TieGroup& g : groups) {
    tp += g.positives;
    fp += g.negatives;
    const long double current = Precision(tp, fp);
    area += static_cast<long double>(g.positives) * (previous + current) / 2.0L;
    previous = current;
  }
  return static_cast<double>(area / static_cast<long double>(tp));
}

}  // namespace ranked

// Penalty of the positive at `index`: negatives ranked strictly above it plus
// half of the negatives tied with it.
inline double pen(std::size_t index, const LabeledScoreSet& s) {
  if (index >= s.size() || !s.label(index)) {
    throw InvalidArgument("pen requires the index of a positive instance");
  }
  const double score = s.score(index);
  std::size_t above = 0;
  std::size_t tied = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.label(j)) continue;
    if (s.score(j) > score) {
      ++above;
    } else if (s.score(j) == score) {
      ++tied;
    }
  }
  return static_cast<double>(above) + 0.5 * static_cast<double>(tied);
}

inline double arl(const LabeledScoreSet& s) {
  if (s.positives() == 0) throw UndefinedMeasure("ARL needs a positive");
  return ranked::Arl(RankGroups(s));
}

inline double roc_auc(const LabeledScoreSet& s) {
  if (s.positives() == 0 || s.negatives() == 0) {
    throw UndefinedMeasure("ROC AUC needs both classes");
  }
  return ranked::RocAuc(RankGroups(s));
}

inline double pr_auc(const LabeledScoreSet& s) {
  if (s.positives() == 0) throw UndefinedMeasure("PR AUC needs a positive");
  return ranked::PrAuc(RankGroups(s));
}

inline double class_balance(std::size_t positives, std::size_t negatives) {
  if (positives == 0 || negatives == 0) return 0.0;
  const double p = static_cast<double>(positives);
  const double n = static_cast<double>(negatives);
  return std::min(n / p, p / n);
}

inline double class_balance(const LabeledScoreSet& s) {
  return class_balance(s.positives(), s.negatives());
}

// |I|^alpha * cb(I)^beta with 0^0 = 1.
inline double weight(std::size_t positives, std::size_t negatives, double alpha,
                     double beta) {
  const double size_term =
      alpha == 0.0 ? 1.0
                   : std::pow(static_cast<double>(positives + negatives), alpha);
  const double balance_term =
      beta == 0.0 ? 1.0 : std::pow(class_balance(positives, negatives), beta);
  return size_term * balance_term;
}

inline double weight(const LabeledScoreSet& s, double alpha, double beta) {
  return weight(s.positives(), s.negatives(), alpha, beta);
}

}  // namespace subgroup

#endif  // SUBGROUP_METRICS_HPP_
