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

// Exhaustive top-k subgroup search with branch-and-bound pruning.
//
// Patterns are enumerated canonically: a child appends a selector whose id
// is larger than the parent's largest id and whose attribute is not used yet,
// so every selector set is generated at most once. A branch is cut when
//   - its cover falls below min_cover (anti-monotone),
//   - its measure is undefined (a class is missing; every subset misses it
//     too), or
//   - pruning is on and its optimistic estimate is below the current k-th
//     best score.

#ifndef SUBGROUP_SEARCH_HPP_
#define SUBGROUP_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <queue>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "subgroup/bounds.hpp"
#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/scoring.hpp"

namespace subgroup {

enum class Strategy { kBestFirst, kDepthFirst };

inline std::string_view ToString(Strategy s) {
  return s == Strategy::kBestFirst ? "best-first" : "dfs";
}

struct SearchConfig {
  std::size_t top_k = 5;
  std::size_t max_depth = 4;
  std::size_t min_cover = 20;
  bool pruning = true;
  ScoringSpec spec;
  Strategy strategy = Strategy::kBestFirst;
  // 1 runs the exact single-threaded search; more workers split the
  // first-level subtrees among themselves.
  std::size_t threads = 1;

  void Validate() const {
    if (top_k < 1) throw InvalidArgument("top_k must be >= 1");
    if (max_depth < 1) throw InvalidArgument("max_depth must be >= 1");
    if (min_cover < 1) throw InvalidArgument("min_cover must be >= 1");
    if (threads < 1) throw InvalidArgument("threads must be >= 1");
    spec.Validate();
  }
};

struct SearchStats {
  // Patterns whose cover passed min_cover and whose score was computed.
  std::uint64_t evaluated = 0;
  // Branches cut by the optimistic estimate.
  std::uint64_t pruned = 0;
  double seconds = 0.0;
};

struct ResultSet {
  std::vector<ScoredPattern> patterns;
  SearchStats stats;

  std::size_t size() const noexcept { return patterns.size(); }
  bool empty() const noexcept { return patterns.empty(); }
};

// Same patterns with the same scores in the same order.
inline bool SameResults(const ResultSet& a, const ResultSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.patterns[i].pattern != b.patterns[i].pattern ||
        a.patterns[i].interestingness != b.patterns[i].interestingness) {
      return false;
    }
  }
  return true;
}

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Pattern::Id id : p.ids()) {
      h ^= id + 1;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

// Thread-safe bounded collection of the best patterns seen so far.
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  void Offer(ScoredPattern candidate) {
    std::lock_guard lock(mutex_);
    if (items_.size() == k_ && !RanksBefore(candidate, items_.back())) return;
    auto pos = std::upper_bound(items_.begin(), items_.end(), candidate, RanksBefore);
    items_.insert(pos, std::move(candidate));
    if (items_.size() > k_) items_.pop_back();
    if (items_.size() == k_) {
      threshold_.store(items_.back().interestingness, std::memory_order_release);
    }
  }

  // Score of the k-th best pattern, or -inf while fewer than k are known.
  // Only grows, so a stale read prunes less, never wrongly.
  double Threshold() const { return threshold_.load(std::memory_order_acquire); }

  std::vector<ScoredPattern> Take() {
    std::lock_guard lock(mutex_);
    return std::move(items_);
  }

 private:
  std::size_t k_;
  mutable std::mutex mutex_;
  std::vector<ScoredPattern> items_;
  std::atomic<double> threshold_{-std::numeric_limits<double>::infinity()};
};

// An estimate this far below the threshold cannot be beaten by a
// specialization, even allowing for rounding in score evaluation.
inline bool CanPrune(double estimate, double threshold) {
  if (!std::isfinite(threshold)) return false;
  const double slack = 1e-9 * std::max(1.0, std::abs(threshold));
  return estimate + slack < threshold;
}

struct Node {
  Pattern pattern;
  double estimate = std::numeric_limits<double>::infinity();
};

// Higher estimate first; equal estimates in canonical pattern order.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.estimate != b.estimate) return a.estimate < b.estimate;
    return b.pattern < a.pattern;
  }
};

class Worker {
 public:
  Worker(const SelectorIndex& index, const SearchConfig& cfg, const Scorer& scorer,
         TopK& top)
      : index_(index), cfg_(cfg), scorer_(scorer), top_(top) {}

  // Runs the search below the given nodes (which are already evaluated).
  void Run(std::vector<Node> start) {
    if (cfg_.strategy == Strategy::kBestFirst) {
      std::priority_queue<Node, std::vector<Node>, NodeOrder> frontier(NodeOrder{},
                                                                       std::move(start));
      while (!frontier.empty()) {
        Node node = frontier.top();
        frontier.pop();
        Expand(node, [&](Node child) { frontier.push(std::move(child)); });
      }
    } else {
      std::vector<Node> stack(start.rbegin(), start.rend());
      while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        std::vector<Node> children;
        Expand(node, [&](Node child) { children.push_back(std::move(child)); });
        stack.insert(stack.end(), children.rbegin(), children.rend());
      }
    }
  }

  // Evaluates the children of `node`, handing expandable ones to `push`.
  template <typename Push>
  void Expand(const Node& node, Push&& push) {
    if (cfg_.pruning && CanPrune(node.estimate, top_.Threshold())) {
      ++stats_.pruned;
      return;
    }
    const Pattern& parent = node.pattern;
    if (parent.size() >= cfg_.max_depth) return;
    const Cover parent_cover = index_.CoverOf(parent);
    std::vector<bool> used(index_.dataset().attributes().size(), false);
    for (Pattern::Id id : parent.ids()) used[index_.selector(id).attribute] = true;
    const Pattern::Id first = parent.empty() ? 0 : parent.back() + 1;
    for (Pattern::Id id = first; id < index_.size(); ++id) {
      if (used[index_.selector(id).attribute]) continue;
      Pattern child = parent.With(id);
      const Cover c = parent_cover.Refine(index_.rows(id), index_.dataset());
      if (c.size() < cfg_.min_cover || !scorer_.Defined(c)) continue;
      const double estimate = Evaluate(child, c);
      if (child.size() >= cfg_.max_depth) continue;
      if (cfg_.pruning && CanPrune(estimate, top_.Threshold())) {
        ++stats_.pruned;
        continue;
      }
      push(Node{std::move(child), estimate});
    }
  }

  // Scores a pattern, offers it to the top-k and returns its optimistic
  // estimate (+inf when pruning is off).
  double Evaluate(const Pattern& p, const Cover& c) {
    ++stats_.evaluated;
#ifndef NDEBUG
    // Canonical generation reaches every selector set at most once.
    const bool fresh = seen_.insert(p).second;
    assert(fresh && "pattern enumerated twice");
    (void)fresh;
#endif
    const auto groups = RankedGroups(c, index_.dataset());
    const double weighted = scorer_.Weight(c) * scorer_.RelativeFromGroups(groups);
    ScoredPattern scored;
    scored.pattern = p;
    scored.weighted_score = weighted;
    scored.interestingness = weighted;
    if (cfg_.spec.generalization_aware) {
      memo_.emplace(p, weighted);
      scored.interestingness = weighted - BestGeneralization(p);
    }
    top_.Offer(std::move(scored));
    if (!cfg_.pruning) return std::numeric_limits<double>::infinity();
    return OptimisticEstimate(scorer_, groups, c.positives(), c.negatives());
  }

  const SearchStats& stats() const noexcept { return stats_; }

 private:
  double BestGeneralization(const Pattern& p) {
    double best = 0.0;  // the empty pattern
    for (const Pattern& h : p.Generalizations()) {
      if (h.empty()) continue;
      auto it = memo_.find(h);
      if (it == memo_.end()) {
        it = memo_.emplace(h, GeneralizationScore(scorer_, index_.CoverOf(h))).first;
      }
      best = std::max(best, it->second);
    }
    return best;
  }

  const SelectorIndex& index_;
  const SearchConfig& cfg_;
  const Scorer& scorer_;
  TopK& top_;
  SearchStats stats_;
  std::unordered_map<Pattern, double, PatternHash> memo_;
#ifndef NDEBUG
  std::unordered_set<Pattern, PatternHash> seen_;
#endif
};

}  // namespace detail

// Top-k patterns of length 1..max_depth with cover >= min_cover and a defined
// measure, ranked by RanksBefore. The result does not depend on pruning,
// strategy or thread count.
inline ResultSet mine(const SelectorIndex& index, const SearchConfig& cfg) {
  cfg.Validate();
  const auto start_time = std::chrono::steady_clock::now();
  const Scorer scorer(index.dataset(), cfg.spec);
  detail::TopK top(cfg.top_k);
  ResultSet result;

  const detail::Node root{Pattern{}, std::numeric_limits<double>::infinity()};
  if (cfg.threads == 1) {
    detail::Worker worker(index, cfg, scorer, top);
    worker.Run({root});
    result.stats = worker.stats();
  } else {
    // First level in the calling thread, then whole subtrees per task.
    detail::Worker seed(index, cfg, scorer, top);
    std::vector<detail::Node> level_one;
    seed.Expand(root, [&](detail::Node n) { level_one.push_back(std::move(n)); });
    std::sort(level_one.begin(), level_one.end(),
              [](const detail::Node& a, const detail::Node& b) {
                return detail::NodeOrder{}(b, a);
              });
    std::atomic<std::size_t> next{0};
    std::mutex stats_mutex;
    SearchStats total = seed.stats();
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min(cfg.threads, std::max<std::size_t>(1, level_one.size()));
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        detail::Worker worker(index, cfg, scorer, top);
        for (std::size_t i = next++; i < level_one.size(); i = next++) {
          worker.Run({level_one[i]});
        }
        std::lock_guard lock(stats_mutex);
        total.evaluated += worker.stats().evaluated;
        total.pruned += worker.stats().pruned;
      });
    }
    pool.clear();
    result.stats = total;
  }

  result.patterns = top.Take();
  for (ScoredPattern& sp : result.patterns) {
    const Cover c = index.CoverOf(sp.pattern);
    sp.description = index.Describe(sp.pattern);
    sp.diagnostics = scorer.Diagnose(c);
  }
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return result;
}

inline ResultSet mine(const Dataset& ds, std::vector<Selector> selectors,
                      const SearchConfig& cfg) {
  if (selectors.empty()) throw InvalidArgument("no selectors to search over");
  const SelectorIndex index(ds, std::move(selectors));
  return mine(index, cfg);
}

// Generalization-aware search: each score is reduced by the best weighted
// score among its generalizations. Pruning still uses the weighted estimate,
// which bounds the adjusted score because the empty generalization scores 0.
inline ResultSet mine_gen_aware(const SelectorIndex& index, const SearchConfig& cfg) {
  if (!cfg.spec.generalization_aware) {
    throw InvalidArgument("mine_gen_aware requires spec.generalization_aware");
  }
  return mine(index, cfg);
}

}  // namespace subgroup

#endif  // SUBGROUP_SEARCH_HPP_
