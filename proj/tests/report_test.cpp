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


#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subgroup/report.hpp"

namespace subgroup {
namespace {

ResultSet Mined(const SelectorIndex& index) {
  SearchConfig cfg;
  cfg.top_k = 4;
  cfg.max_depth = 2;
  cfg.min_cover = 5;
  cfg.spec.measure = Measure::kPrAuc;
  return mine(index, cfg);
}

TEST(ResultsCsv, HeaderAndRows) {
  std::mt19937_64 rng(1);
  const Dataset ds = oracle::RandomDataset(rng, 100, 3);
  const SelectorIndex index(ds, generate_selectors(ds));
  const ResultSet rs = Mined(index);
  std::ostringstream out;
  report::WriteResultsCsv(out, rs);
  std::istringstream in(out.str());
  const auto rows = csv::Read(in);
  ASSERT_EQ(rows.size(), rs.size() + 1);
  EXPECT_EQ(rows[0], (csv::Row{"interestingness", "pattern", "ARL", "PR AUC", "ROC AUC", "cover",
                               "NCR"}));
  EXPECT_EQ(rows[1][1], rs.patterns[0].description);
  EXPECT_EQ(std::stod(rows[1][0]), rs.patterns[0].interestingness);
}

TEST(ResultsCsv, UndefinedMetricsPrintAsDash) {
  ResultSet rs;
  ScoredPattern sp;
  sp.description = "a=x";
  sp.diagnostics.positives = 3;
  sp.diagnostics.cover_size = 3;
  sp.diagnostics.arl = 0.0;
  sp.diagnostics.pr_auc = 1.0;
  rs.patterns.push_back(sp);
  std::ostringstream out;
  report::WriteResultsCsv(out, rs);
  EXPECT_NE(out.str().find("a=x,0,1,-,3,0"), std::string::npos) << out.str();
  EXPECT_TRUE(report::ToJson(sp)["roc_auc"].is_null());
}

TEST(ResultsJson, TimingOnlyOnRequest) {
  std::mt19937_64 rng(2);
  const Dataset ds = oracle::RandomDataset(rng, 100, 3);
  const SelectorIndex index(ds, generate_selectors(ds));
  const ResultSet rs = Mined(index);
  EXPECT_FALSE(report::ToJson(rs)["stats"].contains("seconds"));
  EXPECT_TRUE(report::ToJson(rs, true)["stats"].contains("seconds"));
  EXPECT_EQ(report::ToJson(rs)["results"].size(), rs.size());
}

TEST(ResultsJson, RepeatedRunsSerializeIdentically) {
  std::mt19937_64 rng(3);
  const Dataset ds = oracle::RandomDataset(rng, 200, 4);
  const SelectorIndex index(ds, generate_selectors(ds));
  EXPECT_EQ(report::ToJson(Mined(index)).dump(), report::ToJson(Mined(index)).dump());
  std::ostringstream a, b;
  report::WriteResultsCsv(a, Mined(index));
  report::WriteResultsCsv(b, Mined(index));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Summary, MeansAndIou) {
  std::vector<std::string> g = {"a", "a", "b", "b"};
  const Dataset ds({Attribute::Nominal("g", g)}, {1, 0, 1, 0}, {0.1, 0.2, 0.3, 0.4});
  const SelectorIndex index(ds, {Selector::Equals(0, 0), Selector::Equals(0, 1)});
  ResultSet rs;
  for (Pattern::Id id : {0u, 1u}) {
    ScoredPattern sp;
    sp.pattern = Pattern{id};
    sp.interestingness = 1.0 + id;
    sp.diagnostics.cover_size = 2;
    sp.diagnostics.ncr = 0.5;
    rs.patterns.push_back(sp);
  }
  const report::Summary s = report::Summarize(rs, index);
  EXPECT_EQ(s.count, 2u);
  EXPECT_EQ(s.mean_cover, 2.0);
  EXPECT_EQ(s.mean_interestingness, 1.5);
  ASSERT_TRUE(s.mean_pairwise_iou.has_value());
  EXPECT_EQ(*s.mean_pairwise_iou, 0.0);
  rs.patterns.pop_back();
  EXPECT_TRUE(report::ToJson(report::Summarize(rs, index))["mean_pairwise_iou"].is_null());
}

TEST(SignificanceCsv, Columns) {
  SignificanceReport rep;
  SignificanceEntry e;
  e.pattern.description = "g=a";
  e.raw.p = 0.01;
  e.raw.testable = true;
  e.raw.resamples = 100;
  e.raw.positives = 3;
  e.raw.negatives = 4;
  e.adjusted = 0.02;
  e.significant = true;
  rep.entries.push_back(e);
  std::ostringstream out;
  report::WriteSignificanceCsv(out, rep);
  EXPECT_NE(out.str().find("1,g=a,0,0.01,0.02,1,1,100,7"), std::string::npos) << out.str();
}

TEST(BenchCsv, DeterministicColumnsOnly) {
  BenchRow r;
  r.measure = Measure::kArl;
  r.weight = 0.3;
  r.nodes_pruned = 10;
  r.nodes_unpruned = 40;
  r.identical = true;
  r.median_seconds_pruned = 0.5;
  std::ostringstream out;
  report::WriteBenchCsv(out, {r});
  EXPECT_EQ(out.str(),
            "measure,weight,nodes_pruned,nodes_unpruned,node_ratio,identical\n"
            "arl,0.3,10,40,0.25,1\n");
}

}  // namespace
}  // namespace subgroup
