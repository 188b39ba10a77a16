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

// Experimental protocols: three-way splits, injected weaknesses, cover
// overlap, synthetic skew surfaces and pruning benchmarks.

#ifndef SUBGROUP_EXPERIMENTS_HPP_
#define SUBGROUP_EXPERIMENTS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/metrics.hpp"
#include "subgroup/scoring.hpp"
#include "subgroup/search.hpp"
#include "subgroup/stats.hpp"

namespace subgroup {

struct Split3 {
  Dataset train;
  Dataset search;
  Dataset validation;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> search_rows;
  std::vector<std::size_t> validation_rows;
};

// Random partition into three parts whose sizes differ by at most one (the
// first parts take the remainder). Rows keep their original order inside each
// part.
inline Split3 split3(const Dataset& ds, std::uint64_t seed) {
  const std::size_t n = ds.size();
  if (n < 3) throw InvalidArgument("split3 needs at least 3 instances");
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::mt19937_64 rng(Mix64(seed));
  std::shuffle(rows.begin(), rows.end(), rng);
  const std::size_t base = n / 3;
  const std::size_t extra = n % 3;
  const std::size_t sizes[3] = {base + (extra > 0), base + (extra > 1), base};
  Split3 out;
  std::vector<std::size_t>* parts[3] = {&out.train_rows, &out.search_rows,
                                        &out.validation_rows};
  std::size_t offset = 0;
  for (int k = 0; k < 3; ++k) {
    parts[k]->assign(rows.begin() + static_cast<std::ptrdiff_t>(offset),
                     rows.begin() + static_cast<std::ptrdiff_t>(offset + sizes[k]));
    std::sort(parts[k]->begin(), parts[k]->end());
    offset += sizes[k];
  }
  out.train = ds.Subset(out.train_rows);
  out.search = ds.Subset(out.search_rows);
  out.validation = ds.Subset(out.validation_rows);
  return out;
}

// Negates the predictions of covered instances.
inline Dataset inject(const Dataset& ds, const Cover& c) {
  if (c.size() == 0) throw InvalidArgument("cannot inject into an empty cover");
  std::vector<double> predictions(ds.predictions().begin(), ds.predictions().end());
  for (std::size_t i : c.bits().Indices()) predictions[i] = -predictions[i];
  return ds.WithPredictions(std::move(predictions));
}

inline Dataset inject(const SelectorIndex& index, const Pattern& p) {
  return inject(index.dataset(), index.CoverOf(p));
}

struct InjectionCandidates {
  std::size_t max_length = 3;
  double min_fraction = 0.004;
  double max_fraction = 0.006;
  bool require_both_classes = false;
  // Minimum class balance min(P/N, N/P) of the cover.
  double min_class_balance = 0.0;
};

// Every well-formed pattern up to max_length whose cover fraction lies in
// [min_fraction, max_fraction], in canonical order.
inline std::vector<Pattern> InjectableCandidates(const SelectorIndex& index,
                                                 const InjectionCandidates& opt) {
  const double n = static_cast<double>(index.dataset().size());
  std::vector<Pattern> out;
  std::vector<std::pair<Pattern, Cover>> stack;
  stack.emplace_back(Pattern{}, Cover::All(index.dataset()));
  while (!stack.empty()) {
    auto [p, c] = std::move(stack.back());
    stack.pop_back();
    if (!p.empty()) {
      const double frac = static_cast<double>(c.size()) / n;
      if (frac >= opt.min_fraction && frac <= opt.max_fraction &&
          (!opt.require_both_classes || (c.positives() > 0 && c.negatives() > 0)) &&
          class_balance(c.positives(), c.negatives()) >= opt.min_class_balance) {
        out.push_back(p);
      }
    }
    if (p.size() >= opt.max_length) continue;
    const Pattern::Id first = p.empty() ? 0 : p.back() + 1;
    for (Pattern::Id id = first; id < index.size(); ++id) {
      bool clash = false;
      for (Pattern::Id used : p.ids()) {
        clash |= index.selector(used).attribute == index.selector(id).attribute;
      }
      if (clash) continue;
      Cover child = c.Refine(index.rows(id), index.dataset());
      // Covers only shrink, so a branch below the band is dead.
      if (static_cast<double>(child.size()) / n < opt.min_fraction) continue;
      stack.emplace_back(p.With(id), std::move(child));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Pattern pick_injectable(const SelectorIndex& index, std::uint64_t seed,
                               const InjectionCandidates& opt = {}) {
  const std::vector<Pattern> candidates = InjectableCandidates(index, opt);
  if (candidates.empty()) {
    throw InvalidArgument("no injectable pattern with cover fraction in [" +
                          csv::FormatDouble(opt.min_fraction) + ", " +
                          csv::FormatDouble(opt.max_fraction) +
                          "]; try a wider fraction band");
  }
  std::mt19937_64 rng(Mix64(seed));
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

// Intersection over union; 0 when both covers are empty.
inline double iou(const BitVector& a, const BitVector& b) {
  const std::size_t inter = a.CountAnd(b);
  const std::size_t uni = (a | b).count();
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

inline double iou(const Cover& a, const Cover& b) { return iou(a.bits(), b.bits()); }

// Mean IoU over unordered pairs; nullopt for fewer than two covers.
inline std::optional<double> mean_pairwise_iou(const std::vector<Cover>& covers) {
  if (covers.size() < 2) return std::nullopt;
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      total += iou(covers[i], covers[j]);
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

inline std::optional<double> mean_pairwise_iou(const ResultSet& rs,
                                               const SelectorIndex& index) {
  std::vector<Cover> covers;
  for (const auto& sp : rs.patterns) covers.push_back(index.CoverOf(sp.pattern));
  return mean_pairwise_iou(covers);
}

// Best IoU between a reference cover and any result.
inline double BestIou(const ResultSet& rs, const SelectorIndex& index, const Cover& target) {
  double best = 0.0;
  for (const auto& sp : rs.patterns) best = std::max(best, iou(index.CoverOf(sp.pattern), target));
  return best;
}

// Scores from a bivariate standard normal (z, z_hat) with correlation corr;
// the round(q * size) smallest z become negatives, the rest positives, and
// z_hat is the prediction.
inline LabeledScoreSet synth_skew(double corr, std::size_t size, double q,
                                  std::uint64_t seed) {
  if (!(corr >= -1.0 && corr <= 1.0)) throw InvalidArgument("corr must be in [-1, 1]");
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("q must be in (0, 1)");
  const std::size_t negatives =
      static_cast<std::size_t>(std::llround(q * static_cast<double>(size)));
  if (size == 0 || negatives == 0 || negatives >= size) {
    throw InvalidArgument("q * size leaves one class empty");
  }
  std::mt19937_64 rng(Mix64(seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(size);
  std::vector<double> z_hat(size);
  const double residual = std::sqrt(std::max(0.0, 1.0 - corr * corr));
  for (std::size_t i = 0; i < size; ++i) {
    z[i] = normal(rng);
    z_hat[i] = corr * z[i] + residual * normal(rng);
  }
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return z[a] != z[b] ? z[a] < z[b] : a < b;
  });
  std::vector<std::uint8_t> labels(size, 1);
  for (std::size_t r = 0; r < negatives; ++r) labels[order[r]] = 0;
  return LabeledScoreSet(std::move(labels), std::move(z_hat));
}

enum class SkewAxis { kCoverSize, kNcr };

struct SkewConfig {
  Measure measure = Measure::kRocAuc;
  SkewAxis axis = SkewAxis::kCoverSize;
  // Cover sizes or NCR values, depending on the axis.
  std::vector<double> grid;
  std::vector<double> correlations = {0.0};
  std::size_t repeats = 20;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double beta = 0.0;
  // Held fixed along the other axis.
  std::size_t fixed_size = 100;
  double fixed_ncr = 0.5;
  // The whole-dataset reference every sample is compared against.
  double reference_corr = 0.0;
  std::size_t reference_size = 100;
  double reference_ncr = 0.5;
};

struct SkewCell {
  double corr = 0.0;
  std::size_t size = 0;
  double ncr = 0.0;
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> scores;
};

// For each (corr, grid value), the mean over repeats of the weighted relative
// score of a synthetic sample against a synthetic reference set.
inline std::vector<SkewCell> skew_surface(const SkewConfig& cfg) {
  if (cfg.grid.empty()) throw InvalidArgument("skew grid is empty");
  if (cfg.repeats < 1) throw InvalidArgument("repeats must be >= 1");
  std::vector<SkewCell> cells;
  for (std::size_t ci = 0; ci < cfg.correlations.size(); ++ci) {
    for (std::size_t gi = 0; gi < cfg.grid.size(); ++gi) {
      SkewCell cell;
      cell.corr = cfg.correlations[ci];
      if (cfg.axis == SkewAxis::kCoverSize) {
        cell.size = static_cast<std::size_t>(std::llround(cfg.grid[gi]));
        cell.ncr = cfg.fixed_ncr;
      } else {
        cell.size = cfg.fixed_size;
        cell.ncr = cfg.grid[gi];
      }
      for (std::size_t r = 0; r < cfg.repeats; ++r) {
        const std::uint64_t cell_seed = Mix64(Mix64(Mix64(cfg.seed) ^ ci) ^ (gi << 20) ^ r);
        const LabeledScoreSet sample = synth_skew(cell.corr, cell.size, cell.ncr, cell_seed);
        const LabeledScoreSet reference = synth_skew(
            cfg.reference_corr, cfg.reference_size, cfg.reference_ncr, Mix64(cell_seed));
        const double relative =
            RelativeDifference(cfg.measure, Direction::kUnder, Evaluate(cfg.measure, sample),
                               Evaluate(cfg.measure, reference));
        cell.scores.push_back(weight(sample, cfg.alpha, cfg.beta) * relative);
      }
      const double n = static_cast<double>(cell.scores.size());
      cell.mean = std::accumulate(cell.scores.begin(), cell.scores.end(), 0.0) / n;
      double ss = 0.0;
      for (double s : cell.scores) ss += (s - cell.mean) * (s - cell.mean);
      cell.sd = cell.scores.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

struct BenchConfig {
  std::vector<Measure> measures = {Measure::kArl, Measure::kPrAuc, Measure::kRocAuc};
  std::vector<double> weights = {0.0, 0.1, 0.3, 1.0};
  std::size_t repeats = 3;
  std::size_t top_k = 5;
  std::size_t max_depth = 4;
  std::size_t min_cover = 20;
};

struct BenchRow {
  Measure measure = Measure::kRocAuc;
  double weight = 0.0;
  std::uint64_t nodes_pruned = 0;
  std::uint64_t nodes_unpruned = 0;
  double median_seconds_pruned = 0.0;
  double median_seconds_unpruned = 0.0;
  bool identical = false;

  double node_ratio() const {
    return nodes_unpruned == 0 ? 1.0
                               : static_cast<double>(nodes_pruned) /
                                     static_cast<double>(nodes_unpruned);
  }
  double speedup() const {
    return median_seconds_pruned > 0.0 ? median_seconds_unpruned / median_seconds_pruned
                                       : 0.0;
  }
};

inline double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

// Paired searches with and without pruning for each measure and alpha = beta.
inline std::vector<BenchRow> bench_pruning(const SelectorIndex& index, const BenchConfig& cfg) {
  if (cfg.repeats < 1) throw InvalidArgument("repeats must be >= 1");
  std::vector<BenchRow> rows;
  for (Measure m : cfg.measures) {
    for (double w : cfg.weights) {
      SearchConfig sc;
      sc.top_k = cfg.top_k;
      sc.max_depth = cfg.max_depth;
      sc.min_cover = cfg.min_cover;
      sc.spec.measure = m;
      sc.spec.alpha = w;
      sc.spec.beta = w;
      BenchRow row;
      row.measure = m;
      row.weight = w;
      std::vector<double> with;
      std::vector<double> without;
      row.identical = true;
      for (std::size_t r = 0; r < cfg.repeats; ++r) {
        sc.pruning = true;
        const ResultSet pruned = mine(index, sc);
        sc.pruning = false;
        const ResultSet full = mine(index, sc);
        with.push_back(pruned.stats.seconds);
        without.push_back(full.stats.seconds);
        row.nodes_pruned = pruned.stats.evaluated;
        row.nodes_unpruned = full.stats.evaluated;
        row.identical = row.identical && SameResults(pruned, full);
      }
      row.median_seconds_pruned = Median(with);
      row.median_seconds_unpruned = Median(without);
      rows.push_back(row);
    }
  }
  return rows;
}

// Tabular data with a latent risk score: labels follow the latent score plus
// noise, predictions are a noisy monotone transform of it. Three numeric and
// three nominal attributes drive the latent score.
inline Dataset SyntheticTabular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(Mix64(seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> age_dist(18, 80);
  std::discrete_distribution<int> education({0.10, 0.30, 0.25, 0.20, 0.10, 0.05});
  std::discrete_distribution<int> region({0.35, 0.25, 0.20, 0.15, 0.05});
  std::discrete_distribution<int> sector({0.5, 0.3, 0.15, 0.05});
  const double education_effect[] = {-1.0, -0.5, 0.0, 0.4, 0.8, 1.2};
  const double region_effect[] = {0.0, 0.2, -0.2, 0.3, -0.3};
  const double sector_effect[] = {0.0, 0.3, -0.3, 0.5};
  const char* education_names[] = {"none", "school", "college", "bachelor", "master", "phd"};
  const char* region_names[] = {"north", "south", "east", "west", "island"};
  const char* sector_names[] = {"private", "public", "self", "nonprofit"};

  std::vector<double> age(n), hours(n), income(n);
  std::vector<std::string> edu(n), reg(n), sec(n);
  std::vector<double> latent(n);
  for (std::size_t i = 0; i < n; ++i) {
    age[i] = age_dist(rng);
    hours[i] = std::round(std::clamp(40.0 + 10.0 * normal(rng), 5.0, 90.0));
    income[i] = std::round(std::exp(10.3 + 0.5 * normal(rng)));
    const int e = education(rng);
    const int r = region(rng);
    const int s = sector(rng);
    edu[i] = education_names[e];
    reg[i] = region_names[r];
    sec[i] = sector_names[s];
    latent[i] = 0.03 * (age[i] - 45.0) + 0.04 * (hours[i] - 40.0) +
                0.6 * (std::log(income[i]) - 10.3) + education_effect[e] + region_effect[r] +
                sector_effect[s];
  }
  std::vector<std::uint8_t> labels(n);
  std::vector<double> predictions(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double truth = latent[i] + 0.9 * normal(rng);
    labels[i] = truth > 1.0 ? 1 : 0;
    const double noisy = latent[i] + 0.5 * normal(rng);
    predictions[i] = 1.0 / (1.0 + std::exp(-(noisy - 1.0)));
  }
  std::vector<Attribute> attrs;
  attrs.push_back(Attribute::Numeric("age", std::move(age)));
  attrs.push_back(Attribute::Numeric("hours", std::move(hours)));
  attrs.push_back(Attribute::Numeric("income", std::move(income)));
  attrs.push_back(Attribute::Nominal("education", edu));
  attrs.push_back(Attribute::Nominal("region", reg));
  attrs.push_back(Attribute::Nominal("sector", sec));
  return Dataset(std::move(attrs), std::move(labels), std::move(predictions), "label",
                 "score");
}

// Search and validation splits of a synthetic dataset with one injected
// weak subgroup (predictions negated inside the pattern's cover on both
// splits).
struct InjectionBenchmark {
  Dataset search;
  Dataset validation;
  std::vector<Selector> selectors;
  Pattern injected;
};

struct InjectionBenchmarkConfig {
  std::size_t search_size = 10000;
  std::size_t bins = 5;
  InjectionCandidates candidates{3, 0.004, 0.006, true, 0.25};
};

inline InjectionBenchmark MakeInjectionBenchmark(std::uint64_t seed,
                                                 const InjectionBenchmarkConfig& cfg = {}) {
  const Dataset full = SyntheticTabular(3 * cfg.search_size, seed);
  Split3 parts = split3(full, seed);
  InjectionBenchmark out;
  out.selectors = generate_selectors(parts.search, cfg.bins);
  const SelectorIndex search_index(parts.search, out.selectors);
  out.injected = pick_injectable(search_index, seed, cfg.candidates);
  out.search = inject(search_index, out.injected);
  const SelectorIndex validation_index(parts.validation, out.selectors);
  const Cover validation_cover = validation_index.CoverOf(out.injected);
  out.validation = validation_cover.size() > 0 ? inject(parts.validation, validation_cover)
                                               : parts.validation;
  return out;
}

}  // namespace subgroup

#endif  // SUBGROUP_EXPERIMENTS_HPP_
