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


#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subgroup/experiments.hpp"

namespace subgroup {
namespace {

Dataset Numbered(std::size_t n) {
  std::vector<double> id(n);
  std::vector<std::uint8_t> y(n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = static_cast<double>(i);
    y[i] = i % 2;
    s[i] = static_cast<double>(i) / static_cast<double>(n);
  }
  return Dataset({Attribute::Numeric("id", id)}, y, s);
}

TEST(Split3, Sizes) {
  auto sizes = [](std::size_t n) {
    const Split3 s = split3(Numbered(n), 1);
    return std::vector<std::size_t>{s.train.size(), s.search.size(), s.validation.size()};
  };
  EXPECT_EQ(sizes(9), (std::vector<std::size_t>{3, 3, 3}));
  EXPECT_EQ(sizes(10), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_EQ(sizes(11), (std::vector<std::size_t>{4, 4, 3}));
  EXPECT_THROW(split3(Numbered(2), 1), InvalidArgument);
}

TEST(Split3, PartitionsAndIsDeterministic) {
  const Dataset ds = Numbered(101);
  const Split3 a = split3(ds, 7);
  const Split3 b = split3(ds, 7);
  const Split3 c = split3(ds, 8);
  EXPECT_EQ(a.search_rows, b.search_rows);
  EXPECT_NE(a.search_rows, c.search_rows);
  std::vector<std::size_t> all;
  for (const auto* part : {&a.train_rows, &a.search_rows, &a.validation_rows}) {
    all.insert(all.end(), part->begin(), part->end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  for (std::size_t i = 0; i < a.search.size(); ++i) {
    EXPECT_EQ(a.search.attribute(0).values[i], static_cast<double>(a.search_rows[i]));
  }
}

TEST(Inject, NegatesCoveredOnly) {
  const Dataset ds({Attribute::Nominal("g", {"a", "b", "a"})}, {1, 0, 0}, {0.8, 0.3, 0.1});
  const SelectorIndex index(ds, {Selector::Equals(0, 0)});
  const Dataset out = inject(index, Pattern{0});
  EXPECT_EQ(out.prediction(0), -0.8);
  EXPECT_EQ(out.prediction(1), 0.3);
  EXPECT_EQ(out.prediction(2), -0.1);
  const SelectorIndex back_index(out, {Selector::Equals(0, 0)});
  const Dataset back = inject(back_index, Pattern{0});
  for (std::size_t i = 0; i < ds.size(); ++i) EXPECT_EQ(back.prediction(i), ds.prediction(i));
  EXPECT_THROW(inject(ds, Cover(BitVector(3), ds)), InvalidArgument);
}

TEST(Inject, PerfectCoverFlipsToWorstValues) {
  std::vector<std::string> g;
  std::vector<std::uint8_t> y;
  std::vector<double> s;
  for (int i = 0; i < 30; ++i) {
    g.push_back(i < 12 ? "in" : "out");
    y.push_back(i % 3 == 0 ? 1 : 0);
    s.push_back((y.back() ? 2.0 : 0.0) + 0.01 * i);
  }
  const Dataset ds({Attribute::Nominal("g", g)}, y, s);
  const std::vector<Selector> sel = {Selector::Equals(0, 0)};
  const SelectorIndex index(ds, sel);
  const Dataset out = inject(index, Pattern{0});
  const oracle::Sample after = oracle::CoverSample(out, sel, {0});
  EXPECT_EQ(oracle::PairAuc(after), 0.0);
  EXPECT_EQ(oracle::CountingArl(after), static_cast<double>(after.negatives()));
  const SelectorIndex out_index(out, sel);
  const LabeledScoreSet set = extract(out_index.CoverOf(Pattern{0}), out);
  EXPECT_EQ(roc_auc(set), 0.0);
  EXPECT_EQ(arl(set), static_cast<double>(set.negatives()));
  // Worst PR AUC for this many negatives: every negative above every positive.
  EXPECT_NEAR(pr_auc(set), oracle::TrapezoidPrAuc(after), 1e-12);
}

TEST(PickInjectable, CandidatesRespectBand) {
  std::mt19937_64 rng(4);
  const Dataset ds = oracle::RandomDataset(rng, 500, 5);
  const SelectorIndex index(ds, generate_selectors(ds));
  InjectionCandidates opt;
  opt.min_fraction = 0.01;
  opt.max_fraction = 0.03;
  const auto candidates = InjectableCandidates(index, opt);
  ASSERT_FALSE(candidates.empty());
  for (const Pattern& p : candidates) {
    const double frac = static_cast<double>(index.CoverOf(p).size()) / 500.0;
    EXPECT_GE(frac, opt.min_fraction);
    EXPECT_LE(frac, opt.max_fraction);
    EXPECT_LE(p.size(), 3u);
    EXPECT_TRUE(index.IsWellFormed(p));
  }
  // Independent enumeration of length <= 2 patterns finds the same ones.
  std::set<Pattern> want;
  for (Pattern::Id a = 0; a < index.size(); ++a) {
    for (Pattern::Id b = a; b < index.size(); ++b) {
      const Pattern p = a == b ? Pattern{a} : Pattern{a, b};
      if (!index.IsWellFormed(p)) continue;
      const double frac = static_cast<double>(index.CoverOf(p).size()) / 500.0;
      if (frac >= opt.min_fraction && frac <= opt.max_fraction) want.insert(p);
    }
  }
  std::set<Pattern> got;
  for (const Pattern& p : candidates) {
    if (p.size() <= 2) got.insert(p);
  }
  EXPECT_EQ(got, want);
  const Pattern pick = pick_injectable(index, 11, opt);
  EXPECT_TRUE(std::find(candidates.begin(), candidates.end(), pick) != candidates.end());
  EXPECT_EQ(pick, pick_injectable(index, 11, opt));
}

TEST(PickInjectable, NoCandidateSuggestsWiderBand) {
  std::mt19937_64 rng(4);
  const Dataset ds = oracle::RandomDataset(rng, 50, 2);
  const SelectorIndex index(ds, generate_selectors(ds));
  InjectionCandidates opt;
  opt.min_fraction = 0.001;
  opt.max_fraction = 0.002;
  try {
    pick_injectable(index, 1, opt);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("wider"), std::string::npos);
  }
}

TEST(Iou, Examples) {
  BitVector a(10), b(10), c(10);
  for (int i : {0, 1, 2, 3, 4}) a.set(i);
  for (int i : {3, 4, 5, 6, 7}) b.set(i);
  EXPECT_EQ(iou(a, a), 1.0);
  EXPECT_EQ(iou(a, b), 0.25);  // 2 shared, 8 in the union
  c.set(9);
  BitVector d(10);
  d.set(0);
  EXPECT_EQ(iou(c, d), 0.0);
  EXPECT_EQ(iou(BitVector(10), BitVector(10)), 0.0);
}

TEST(MeanPairwiseIou, Examples) {
  const Dataset ds = Numbered(8);
  auto make = [&](std::vector<int> rows) {
    BitVector bits(8);
    for (int r : rows) bits.set(static_cast<std::size_t>(r));
    return Cover(bits, ds);
  };
  EXPECT_FALSE(mean_pairwise_iou(std::vector<Cover>{make({1})}).has_value());
  EXPECT_EQ(*mean_pairwise_iou({make({1, 2}), make({1, 2})}), 1.0);
  EXPECT_EQ(*mean_pairwise_iou({make({1}), make({2}), make({3})}), 0.0);
  // Pairs: {0,1,2}/{1,2,3} = 2/4, {0,1,2}/{2,3,4,5} = 1/6, {1,2,3}/{2,3,4,5} = 2/5.
  EXPECT_NEAR(*mean_pairwise_iou({make({0, 1, 2}), make({1, 2, 3}), make({2, 3, 4, 5})}),
              (0.5 + 1.0 / 6.0 + 0.4) / 3.0, 1e-15);
}

TEST(SynthSkew, Examples) {
  for (std::size_t size : {10, 100, 1000}) {
    const LabeledScoreSet s = synth_skew(1.0, size, 0.5, 3);
    EXPECT_NEAR(roc_auc(s), 1.0, 1e-12);
    EXPECT_EQ(s.negatives(), size / 2);
  }
  // AUC null: sd = sqrt((P+N+1)/(12PN)).
  const LabeledScoreSet null = synth_skew(0.0, 2000, 0.5, 4);
  EXPECT_NEAR(roc_auc(null), 0.5, 3 * std::sqrt(2001.0 / (12.0 * 1000 * 1000)));
  const LabeledScoreSet a = synth_skew(0.3, 50, 0.2, 9);
  const LabeledScoreSet b = synth_skew(0.3, 50, 0.2, 9);
  EXPECT_TRUE(std::equal(a.scores().begin(), a.scores().end(), b.scores().begin()));
  EXPECT_EQ(a.negatives(), 10u);
  EXPECT_THROW(synth_skew(0.0, 10, 0.01, 1), InvalidArgument);
  EXPECT_THROW(synth_skew(1.5, 10, 0.5, 1), InvalidArgument);
}

TEST(SkewSurface, ShapeAndDeterminism) {
  SkewConfig cfg;
  cfg.measure = Measure::kArl;
  cfg.grid = {20, 50, 100};
  cfg.correlations = {0.0, 0.5};
  cfg.repeats = 5;
  const auto cells = skew_surface(cfg);
  ASSERT_EQ(cells.size(), 6u);
  EXPECT_EQ(cells[4].corr, 0.5);
  EXPECT_EQ(cells[4].size, 50u);
  EXPECT_EQ(cells[4].scores.size(), 5u);
  const auto again = skew_surface(cfg);
  for (std::size_t i = 0; i < cells.size(); ++i) EXPECT_EQ(cells[i].mean, again[i].mean);
  cfg.grid.clear();
  EXPECT_THROW(skew_surface(cfg), InvalidArgument);
}

TEST(BenchPruning, IdenticalResultsAndRatioAtMostOne) {
  std::mt19937_64 rng(5);
  const Dataset ds = oracle::RandomDataset(rng, 300, 5);
  const SelectorIndex index(ds, generate_selectors(ds));
  BenchConfig cfg;
  cfg.repeats = 1;
  cfg.max_depth = 3;
  const auto rows = bench_pruning(index, cfg);
  EXPECT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.identical);
    EXPECT_LE(r.node_ratio(), 1.0);
  }
  EXPECT_EQ(Median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(Median({4.0, 1.0}), 2.5);
}

TEST(InjectionBenchmark, InjectedCoverIsInBandAndInverted) {
  InjectionBenchmarkConfig cfg;
  cfg.search_size = 3000;
  cfg.candidates.min_fraction = 0.01;
  cfg.candidates.max_fraction = 0.02;
  const InjectionBenchmark b = MakeInjectionBenchmark(1, cfg);
  EXPECT_EQ(b.search.size(), 3000u);
  const SelectorIndex index(b.search, b.selectors);
  const Cover c = index.CoverOf(b.injected);
  EXPECT_GE(c.size(), 30u);
  EXPECT_LE(c.size(), 60u);
  EXPECT_GE(class_balance(c.positives(), c.negatives()), 0.25);
  const double full = roc_auc(b.search.AllScores());
  EXPECT_LT(roc_auc(extract(c, b.search)), full);
}

TEST(SyntheticTabular, Deterministic) {
  const Dataset a = SyntheticTabular(500, 3);
  const Dataset b = SyntheticTabular(500, 3);
  EXPECT_EQ(a.attributes().size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.prediction(i), b.prediction(i));
  EXPECT_GT(a.positives(), 50u);
  EXPECT_GT(roc_auc(a.AllScores()), 0.7);
}

}  // namespace
}  // namespace subgroup
