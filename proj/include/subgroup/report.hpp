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

// CSV and JSON renderings of results. Numbers use the shortest round-trip
// form so that identical runs produce identical bytes. Wall-clock times are
// only emitted when explicitly requested.

#ifndef SUBGROUP_REPORT_HPP_
#define SUBGROUP_REPORT_HPP_

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "subgroup/csv.hpp"
#include "subgroup/experiments.hpp"
#include "subgroup/scoring.hpp"
#include "subgroup/search.hpp"
#include "subgroup/stats.hpp"

namespace subgroup::report {

inline constexpr const char* kVersion = "1.0.0";

inline std::string Cell(double v) { return std::isnan(v) ? "-" : csv::FormatDouble(v); }

inline nlohmann::json Number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

inline void WriteResultsCsv(std::ostream& out, const ResultSet& rs) {
  csv::WriteRow(out, {"interestingness", "pattern", "ARL", "PR AUC", "ROC AUC", "cover", "NCR"});
  for (const ScoredPattern& sp : rs.patterns) {
    const Diagnostics& d = sp.diagnostics;
    csv::WriteRow(out, {Cell(sp.interestingness), sp.description, Cell(d.arl), Cell(d.pr_auc),
                        Cell(d.roc_auc), std::to_string(d.cover_size), Cell(d.ncr)});
  }
}

inline nlohmann::json ToJson(const ScoredPattern& sp) {
  const Diagnostics& d = sp.diagnostics;
  nlohmann::json ids = nlohmann::json::array();
  for (Pattern::Id id : sp.pattern.ids()) ids.push_back(id);
  return {{"pattern", sp.description},
          {"selector_ids", ids},
          {"interestingness", sp.interestingness},
          {"weighted_score", sp.weighted_score},
          {"arl", Number(d.arl)},
          {"pr_auc", Number(d.pr_auc)},
          {"roc_auc", Number(d.roc_auc)},
          {"cover", d.cover_size},
          {"positives", d.positives},
          {"negatives", d.negatives},
          {"ncr", d.ncr}};
}

inline nlohmann::json ToJson(const ResultSet& rs, bool include_timing = false) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& sp : rs.patterns) results.push_back(ToJson(sp));
  nlohmann::json stats = {{"evaluated", rs.stats.evaluated}, {"pruned", rs.stats.pruned}};
  if (include_timing) stats["seconds"] = rs.stats.seconds;
  return {{"results", results}, {"stats", stats}};
}

inline nlohmann::json ToJson(const ScoringSpec& spec) {
  return {{"measure", ToString(spec.measure)},
          {"alpha", spec.alpha},
          {"beta", spec.beta},
          {"generalization_aware", spec.generalization_aware},
          {"direction", ToString(spec.direction)}};
}

inline nlohmann::json ToJson(const SearchConfig& cfg) {
  return {{"top_k", cfg.top_k},           {"max_depth", cfg.max_depth},
          {"min_cover", cfg.min_cover},   {"pruning", cfg.pruning},
          {"strategy", ToString(cfg.strategy)}, {"scoring", ToJson(cfg.spec)}};
}

inline nlohmann::json ToJson(const SignificanceConfig& cfg) {
  return {{"n_resamples", cfg.n_resamples}, {"correction", ToString(cfg.correction)},
          {"alpha", cfg.alpha},             {"k_prime", cfg.k_prime},
          {"k", cfg.k},                     {"seed", cfg.seed},
          {"plus_one", cfg.plus_one}};
}

inline void WriteSignificanceCsv(std::ostream& out, const SignificanceReport& rep) {
  csv::WriteRow(out, {"rank", "pattern", "interestingness", "p_value", "adjusted_p_value",
                      "significant", "testable", "resamples", "validation_cover"});
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const SignificanceEntry& e = rep.entries[i];
    csv::WriteRow(out, {std::to_string(i + 1), e.pattern.description,
                        Cell(e.pattern.interestingness), Cell(e.raw.p), Cell(e.adjusted),
                        e.significant ? "1" : "0", e.raw.testable ? "1" : "0",
                        std::to_string(e.raw.resamples),
                        std::to_string(e.raw.positives + e.raw.negatives)});
  }
}

inline nlohmann::json ToJson(const SignificanceReport& rep) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"pattern", e.pattern.description},
                       {"p_value", e.raw.p},
                       {"adjusted_p_value", e.adjusted},
                       {"significant", e.significant},
                       {"testable", e.raw.testable},
                       {"resamples", e.raw.resamples},
                       {"statistic", e.raw.statistic}});
  }
  return {{"entries", entries},
          {"candidates", rep.candidates},
          {"significant", rep.significant},
          {"filtered", rep.filtered.size()},
          {"untestable", rep.untestable}};
}

// Mean cover size, NCR and interestingness of a result set plus pairwise IoU.
struct Summary {
  std::size_t count = 0;
  double mean_cover = std::nan("");
  double mean_ncr = std::nan("");
  double mean_interestingness = std::nan("");
  std::optional<double> mean_pairwise_iou;
};

inline Summary Summarize(const ResultSet& rs, const SelectorIndex& index) {
  Summary s;
  s.count = rs.size();
  if (rs.empty()) return s;
  double cover = 0.0, ncr = 0.0, score = 0.0;
  for (const auto& sp : rs.patterns) {
    cover += static_cast<double>(sp.diagnostics.cover_size);
    ncr += sp.diagnostics.ncr;
    score += sp.interestingness;
  }
  const double n = static_cast<double>(rs.size());
  s.mean_cover = cover / n;
  s.mean_ncr = ncr / n;
  s.mean_interestingness = score / n;
  s.mean_pairwise_iou = mean_pairwise_iou(rs, index);
  return s;
}

inline nlohmann::json ToJson(const Summary& s) {
  return {{"count", s.count},
          {"mean_cover", Number(s.mean_cover)},
          {"mean_ncr", Number(s.mean_ncr)},
          {"mean_interestingness", Number(s.mean_interestingness)},
          {"mean_pairwise_iou",
           s.mean_pairwise_iou ? nlohmann::json(*s.mean_pairwise_iou) : nlohmann::json()}};
}

inline void WriteSkewCsv(std::ostream& out, const SkewConfig& cfg,
                         const std::vector<SkewCell>& cells) {
  csv::WriteRow(out, {"measure", "alpha", "beta", "corr", "size", "ncr", "mean", "sd", "repeats"});
  for (const SkewCell& c : cells) {
    csv::WriteRow(out, {std::string(ToString(cfg.measure)), Cell(cfg.alpha), Cell(cfg.beta),
                        Cell(c.corr), std::to_string(c.size), Cell(c.ncr), Cell(c.mean),
                        Cell(c.sd), std::to_string(c.scores.size())});
  }
}

// Deterministic part of a pruning benchmark (node counts, equality).
inline void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  csv::WriteRow(out, {"measure", "weight", "nodes_pruned", "nodes_unpruned", "node_ratio",
                      "identical"});
  for (const BenchRow& r : rows) {
    csv::WriteRow(out, {std::string(ToString(r.measure)), Cell(r.weight),
                        std::to_string(r.nodes_pruned), std::to_string(r.nodes_unpruned),
                        Cell(r.node_ratio()), r.identical ? "1" : "0"});
  }
}

inline void WriteBenchTimingCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  csv::WriteRow(out, {"measure", "weight", "median_seconds_pruned", "median_seconds_unpruned",
                      "speedup"});
  for (const BenchRow& r : rows) {
    csv::WriteRow(out, {std::string(ToString(r.measure)), Cell(r.weight),
                        Cell(r.median_seconds_pruned), Cell(r.median_seconds_unpruned),
                        Cell(r.speedup())});
  }
}

}  // namespace subgroup::report

#endif  // SUBGROUP_REPORT_HPP_
