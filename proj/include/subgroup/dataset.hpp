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

// Data model: attribute columns, binary labels, real-valued predictions, the
// selector/pattern description language and bit-vector covers.

#ifndef SUBGROUP_DATASET_HPP_
#define SUBGROUP_DATASET_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subgroup/csv.hpp"
#include "subgroup/error.hpp"
#include "subgroup/metrics.hpp"

namespace subgroup {

enum class AttributeKind { kNominal, kNumeric };

// One descriptive column. Nominal columns store dictionary codes (-1 marks a
// missing value) with the dictionary sorted lexicographically; numeric columns
// store doubles (NaN marks a missing value).
struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::kNominal;
  std::vector<std::string> levels;
  std::vector<std::int32_t> codes;
  std::vector<double> values;

  static constexpr std::int32_t kMissingCode = -1;
  // Selector code for a level the dataset never contains.
  static constexpr std::int32_t kUnseenCode = -2;

  std::size_t size() const {
    return kind == AttributeKind::kNominal ? codes.size() : values.size();
  }
  bool missing(std::size_t row) const {
    return kind == AttributeKind::kNominal ? codes[row] == kMissingCode
                                           : std::isnan(values[row]);
  }

  static Attribute Nominal(std::string name,
                           const std::vector<std::string>& cells) {
    Attribute a;
    a.name = std::move(name);
    a.kind = AttributeKind::kNominal;
    std::set<std::string> distinct;
    for (const auto& c : cells) {
      if (!c.empty()) distinct.insert(c);
    }
    a.levels.assign(distinct.begin(), distinct.end());
    a.codes.reserve(cells.size());
    for (const auto& c : cells) {
      if (c.empty()) {
        a.codes.push_back(kMissingCode);
      } else {
        a.codes.push_back(static_cast<std::int32_t>(
            std::lower_bound(a.levels.begin(), a.levels.end(), c) -
            a.levels.begin()));
      }
    }
    return a;
  }

  static Attribute Numeric(std::string name, std::vector<double> values) {
    Attribute a;
    a.name = std::move(name);
    a.kind = AttributeKind::kNumeric;
    a.values = std::move(values);
    return a;
  }

  std::string CellText(std::size_t row) const {
    if (missing(row)) return "";
    return kind == AttributeKind::kNominal
               ? levels[static_cast<std::size_t>(codes[row])]
               : csv::FormatDouble(values[row]);
  }
};

// Fixed-length bit vector over instances.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false)
      : words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0), size_(size) {
    TrimTail();
  }

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::size_t CountAnd(const BitVector& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
  }

  BitVector& operator&=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  BitVector& operator|=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool IsSubsetOf(const BitVector& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> Indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void TrimTail() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Instances, labels, predictions. Immutable after construction.
class Dataset {
 public:
  Dataset() = default;

  Dataset(std::vector<Attribute> attributes, std::vector<std::uint8_t> labels,
          std::vector<double> predictions, std::string label_name = "label",
          std::string score_name = "score")
      : attributes_(std::move(attributes)),
        labels_(std::move(labels)),
        predictions_(std::move(predictions)),
        label_name_(std::move(label_name)),
        score_name_(std::move(score_name)) {
    if (labels_.empty()) throw InvalidArgument("dataset needs at least one instance");
    if (predictions_.size() != labels_.size()) {
      throw InvalidArgument("labels and predictions differ in length");
    }
    for (const Attribute& a : attributes_) {
      if (a.size() != labels_.size()) {
        throw InvalidArgument("attribute '" + a.name + "' has wrong length");
      }
    }
    positive_mask_ = BitVector(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] > 1) throw InvalidArgument("label outside {0,1}");
      if (!std::isfinite(predictions_[i])) {
        throw InvalidArgument("non-finite prediction at row " + std::to_string(i + 1));
      }
      if (labels_[i] == 1) positive_mask_.set(i);
    }
    rank_order_.resize(labels_.size());
    std::iota(rank_order_.begin(), rank_order_.end(), std::uint32_t{0});
    std::stable_sort(rank_order_.begin(), rank_order_.end(),
                     [this](std::uint32_t a, std::uint32_t b) {
                       return predictions_[a] > predictions_[b];
                     });
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t positives() const noexcept { return positive_mask_.count(); }
  std::size_t negatives() const noexcept { return size() - positives(); }

  const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
  const Attribute& attribute(std::size_t i) const { return attributes_.at(i); }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }
  std::span<const double> predictions() const noexcept { return predictions_; }
  bool label(std::size_t i) const { return labels_[i] != 0; }
  double prediction(std::size_t i) const { return predictions_[i]; }
  const std::string& label_name() const noexcept { return label_name_; }
  const std::string& score_name() const noexcept { return score_name_; }

  const BitVector& positive_mask() const noexcept { return positive_mask_; }
  // Instance indices by decreasing prediction, ties by index.
  std::span<const std::uint32_t> rank_order() const noexcept { return rank_order_; }

  std::optional<std::size_t> FindAttribute(const std::string& name) const {
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
      if (attributes_[i].name == name) return i;
    }
    return std::nullopt;
  }

  // Rows in the given order. Nominal dictionaries are kept so that selectors
  // remain valid across subsets.
  Dataset Subset(std::span<const std::size_t> rows) const {
    std::vector<Attribute> attrs;
    attrs.reserve(attributes_.size());
    for (const Attribute& a : attributes_) {
      Attribute b;
      b.name = a.name;
      b.kind = a.kind;
      b.levels = a.levels;
      for (std::size_t r : rows) {
        if (a.kind == AttributeKind::kNominal) {
          b.codes.push_back(a.codes.at(r));
        } else {
          b.values.push_back(a.values.at(r));
        }
      }
      attrs.push_back(std::move(b));
    }
    std::vector<std::uint8_t> labels;
    std::vector<double> predictions;
    for (std::size_t r : rows) {
      labels.push_back(labels_.at(r));
      predictions.push_back(predictions_.at(r));
    }
    return Dataset(std::move(attrs), std::move(labels), std::move(predictions),
                   label_name_, score_name_);
  }

  Dataset WithPredictions(std::vector<double> predictions) const {
    return Dataset(attributes_, labels_, std::move(predictions), label_name_,
                   score_name_);
  }

  LabeledScoreSet AllScores() const {
    return LabeledScoreSet(labels_, predictions_);
  }

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::uint8_t> labels_;
  std::vector<double> predictions_;
  std::string label_name_;
  std::string score_name_;
  BitVector positive_mask_;
  std::vector<std::uint32_t> rank_order_;
};

// Boolean condition on a single attribute: equality with a nominal level, or
// membership in [lo, hi) (or [lo, hi] when hi_closed). Missing values never
// match.
struct Selector {
  enum class Kind { kEquals, kInterval };

  std::size_t attribute = 0;
  Kind kind = Kind::kEquals;
  std::int32_t code = 0;
  double lo = 0.0;
  double hi = 0.0;
  bool hi_closed = false;

  static Selector Equals(std::size_t attribute, std::int32_t code) {
    Selector s;
    s.attribute = attribute;
    s.kind = Kind::kEquals;
    s.code = code;
    return s;
  }

  static Selector Interval(std::size_t attribute, double lo, double hi,
                           bool hi_closed) {
    if (!(lo < hi)) throw InvalidArgument("interval selector needs lo < hi");
    Selector s;
    s.attribute = attribute;
    s.kind = Kind::kInterval;
    s.lo = lo;
    s.hi = hi;
    s.hi_closed = hi_closed;
    return s;
  }

  bool Matches(const Dataset& ds, std::size_t row) const {
    const Attribute& a = ds.attribute(attribute);
    if (a.missing(row)) return false;
    if (kind == Kind::kEquals) {
      return a.kind == AttributeKind::kNominal && a.codes[row] == code;
    }
    if (a.kind != AttributeKind::kNumeric) return false;
    const double v = a.values[row];
    return v >= lo && (hi_closed ? v <= hi : v < hi);
  }

  std::string Describe(const Dataset& ds) const {
    const Attribute& a = ds.attribute(attribute);
    if (kind == Kind::kEquals) {
      if (code < 0) return a.name + "=<unseen>";
      return a.name + "=" + a.levels.at(static_cast<std::size_t>(code));
    }
    return a.name + "=[" + csv::FormatDouble(lo) + ";" + csv::FormatDouble(hi) +
           (hi_closed ? "]" : ")");
  }

  friend bool operator==(const Selector&, const Selector&) = default;
};

// Conjunction of selectors, stored as sorted, duplicate-free indices into a
// selector list. The empty pattern covers every instance.
class Pattern {
 public:
  using Id = std::uint32_t;

  Pattern() = default;
  explicit Pattern(std::vector<Id> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  Pattern(std::initializer_list<Id> ids) : Pattern(std::vector<Id>(ids)) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const Id> ids() const noexcept { return ids_; }
  Id back() const { return ids_.back(); }

  bool Contains(Id id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  // Strict-superset relation.
  bool IsSpecializationOf(const Pattern& general) const {
    return size() > general.size() &&
           std::includes(ids_.begin(), ids_.end(), general.ids_.begin(),
                         general.ids_.end());
  }

  Pattern With(Id id) const {
    std::vector<Id> ids = ids_;
    ids.push_back(id);
    return Pattern(std::move(ids));
  }

  // Every strict subset, including the empty pattern.
  std::vector<Pattern> Generalizations() const {
    std::vector<Pattern> out;
    const std::size_t k = ids_.size();
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      std::vector<Id> ids;
      for (std::size_t b = 0; b < k; ++b) {
        if ((mask >> b) & 1U) ids.push_back(ids_[b]);
      }
      out.emplace_back(std::move(ids));
    }
    return out;
  }

  std::string Describe(std::span<const Selector> selectors,
                       const Dataset& ds) const {
    if (ids_.empty()) return "<all>";
    std::string out;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (i != 0) out += " & ";
      out += selectors[ids_[i]].Describe(ds);
    }
    return out;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Id> ids_;
};

// Instances matched by a pattern, with cached class counts.
class Cover {
 public:
  Cover() = default;
  Cover(BitVector bits, const Dataset& ds) : bits_(std::move(bits)) {
    if (bits_.size() != ds.size()) throw InvalidArgument("cover size mismatch");
    positives_ = bits_.CountAnd(ds.positive_mask());
    negatives_ = bits_.count() - positives_;
  }

  static Cover All(const Dataset& ds) { return Cover(BitVector(ds.size(), true), ds); }

  // cover(p ∪ {s}) = cover(p) AND rows(s).
  Cover Refine(const BitVector& selector_rows, const Dataset& ds) const {
    return Cover(bits_ & selector_rows, ds);
  }

  const BitVector& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return positives_ + negatives_; }
  std::size_t positives() const noexcept { return positives_; }
  std::size_t negatives() const noexcept { return negatives_; }
  bool contains(std::size_t row) const { return bits_.test(row); }
  double ncr() const {
    return size() == 0 ? 0.0
                       : static_cast<double>(negatives_) / static_cast<double>(size());
  }

  friend bool operator==(const Cover& a, const Cover& b) { return a.bits_ == b.bits_; }

 private:
  BitVector bits_;
  std::size_t positives_ = 0;
  std::size_t negatives_ = 0;
};

inline BitVector SelectorRows(const Selector& s, const Dataset& ds) {
  BitVector rows(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (s.Matches(ds, i)) rows.set(i);
  }
  return rows;
}

// Evaluates every selector of the pattern on every instance from scratch.
inline Cover cover(const Pattern& p, std::span<const Selector> selectors,
                   const Dataset& ds) {
  BitVector bits(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool all = true;
    for (Pattern::Id id : p.ids()) {
      if (!selectors[id].Matches(ds, i)) {
        all = false;
        break;
      }
    }
    if (all) bits.set(i);
  }
  return Cover(std::move(bits), ds);
}

// Labels and scores of the covered instances, in instance order.
inline LabeledScoreSet extract(const Cover& c, const Dataset& ds) {
  LabeledScoreSet s;
  s.reserve(c.size());
  for (std::size_t i : c.bits().Indices()) s.push_back(ds.label(i), ds.prediction(i));
  return s;
}

// Tie groups of the covered instances by decreasing score, built by walking
// the dataset's precomputed rank order (no sort per cover).
inline std::vector<TieGroup> RankedGroups(const Cover& c, const Dataset& ds) {
  std::vector<TieGroup> groups;
  const auto& bits = c.bits();
  for (std::uint32_t idx : ds.rank_order()) {
    if (!bits.test(idx)) continue;
    const double score = ds.prediction(idx);
    if (groups.empty() || groups.back().score != score) {
      groups.push_back(TieGroup{score, 0, 0});
    }
    if (ds.label(idx)) {
      ++groups.back().positives;
    } else {
      ++groups.back().negatives;
    }
  }
  return groups;
}

// Selector list bound to one dataset, with precomputed row bit vectors.
class SelectorIndex {
 public:
  SelectorIndex(const Dataset& ds, std::vector<Selector> selectors)
      : ds_(&ds), selectors_(std::move(selectors)) {
    rows_.reserve(selectors_.size());
    for (const Selector& s : selectors_) rows_.push_back(SelectorRows(s, ds));
  }

  const Dataset& dataset() const noexcept { return *ds_; }
  std::span<const Selector> selectors() const noexcept { return selectors_; }
  const Selector& selector(Pattern::Id id) const { return selectors_.at(id); }
  const BitVector& rows(Pattern::Id id) const { return rows_.at(id); }
  std::size_t size() const noexcept { return selectors_.size(); }

  Cover CoverOf(const Pattern& p) const {
    BitVector bits(ds_->size(), true);
    for (Pattern::Id id : p.ids()) bits &= rows_.at(id);
    return Cover(std::move(bits), *ds_);
  }

  std::string Describe(const Pattern& p) const { return p.Describe(selectors_, *ds_); }

  // At most one selector per attribute.
  bool IsWellFormed(const Pattern& p) const {
    std::set<std::size_t> seen;
    for (Pattern::Id id : p.ids()) {
      if (id >= selectors_.size()) return false;
      if (!seen.insert(selectors_[id].attribute).second) return false;
    }
    return true;
  }

 private:
  const Dataset* ds_;
  std::vector<Selector> selectors_;
  std::vector<BitVector> rows_;
};

// One equality selector per observed nominal level and equal-frequency
// interval selectors per numeric attribute. Selectors that match every
// instance are dropped.
inline std::vector<Selector> generate_selectors(const Dataset& ds,
                                                std::size_t bins = 5) {
  if (bins < 2) throw InvalidArgument("bins must be at least 2");
  std::vector<Selector> out;
  for (std::size_t a = 0; a < ds.attributes().size(); ++a) {
    const Attribute& attr = ds.attribute(a);
    std::vector<Selector> candidates;
    if (attr.kind == AttributeKind::kNominal) {
      std::vector<bool> observed(attr.levels.size(), false);
      for (std::int32_t code : attr.codes) {
        if (code != Attribute::kMissingCode) observed[static_cast<std::size_t>(code)] = true;
      }
      for (std::size_t level = 0; level < attr.levels.size(); ++level) {
        if (observed[level]) {
          candidates.push_back(Selector::Equals(a, static_cast<std::int32_t>(level)));
        }
      }
    } else {
      std::vector<double> sorted;
      for (double v : attr.values) {
        if (!std::isnan(v)) sorted.push_back(v);
      }
      std::sort(sorted.begin(), sorted.end());
      if (sorted.empty() || sorted.front() == sorted.back()) continue;
      const std::size_t m = sorted.size();
      std::vector<double> edges;
      for (std::size_t k = 1; k < bins; ++k) {
        const std::size_t cut = k * m / bins;
        if (cut == 0 || cut >= m) continue;
        double below = sorted[cut - 1];
        // A cut inside a run of ties moves above the run.
        auto next = std::upper_bound(sorted.begin(), sorted.end(), below);
        if (next == sorted.end()) continue;
        edges.push_back(below + (*next - below) / 2.0);
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      double lo = sorted.front();
      for (double e : edges) {
        candidates.push_back(Selector::Interval(a, lo, e, false));
        lo = e;
      }
      candidates.push_back(Selector::Interval(a, lo, sorted.back(), true));
    }
    for (const Selector& s : candidates) {
      if (SelectorRows(s, ds).count() < ds.size()) out.push_back(s);
    }
  }
  return out;
}

// Rebinds selectors built on `from` to the columns of `to` by attribute name.
// Nominal levels absent from `to` become selectors that match nothing.
inline std::vector<Selector> TranslateSelectors(std::span<const Selector> selectors,
                                                const Dataset& from, const Dataset& to) {
  std::vector<Selector> out;
  out.reserve(selectors.size());
  for (const Selector& s : selectors) {
    const Attribute& src = from.attribute(s.attribute);
    const auto target = to.FindAttribute(src.name);
    if (!target || to.attribute(*target).kind != src.kind) {
      throw InvalidArgument("attribute '" + src.name + "' missing or typed differently");
    }
    Selector t = s;
    t.attribute = *target;
    if (s.kind == Selector::Kind::kEquals) {
      const auto& levels = to.attribute(*target).levels;
      const auto& name = src.levels.at(static_cast<std::size_t>(s.code));
      auto it = std::lower_bound(levels.begin(), levels.end(), name);
      t.code = it != levels.end() && *it == name
                   ? static_cast<std::int32_t>(it - levels.begin())
                   : Attribute::kUnseenCode;
    }
    out.push_back(t);
  }
  return out;
}

struct CsvOptions {
  std::string label_column;
  std::string score_column;
  // Label value mapped to 1; every other value maps to 0. When empty, labels
  // must already be 0/1.
  std::string positive_label;
  // Columns to ignore entirely (e.g. row ids).
  std::vector<std::string> ignore_columns;
  std::vector<std::string> missing_tokens = {"", "NA", "N/A", "?", "NaN", "nan", "null"};
};

inline Dataset load_csv(std::istream& in, const CsvOptions& options) {
  const std::vector<csv::Row> rows = csv::Read(in);
  if (rows.empty()) throw ParseError("CSV has no header row");
  const csv::Row& header = rows.front();
  auto column_of = [&](const std::string& name, const char* role) {
    auto it = std::find(header.begin(), header.end(), name);
    if (name.empty() || it == header.end()) {
      throw ParseError(std::string(role) + " column '" + name + "' not found in header", 1);
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t label_col = column_of(options.label_column, "label");
  const std::size_t score_col = column_of(options.score_column, "score");
  if (rows.size() < 2) throw ParseError("CSV has no data rows");

  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(rows[r].size()),
                       r + 1);
    }
  }

  auto is_missing = [&](const std::string& cell) {
    return std::find(options.missing_tokens.begin(), options.missing_tokens.end(),
                     cell) != options.missing_tokens.end();
  };

  std::set<std::string> distinct_labels;
  for (std::size_t r = 1; r < rows.size(); ++r) distinct_labels.insert(rows[r][label_col]);
  auto list_values = [&] {
    std::string out;
    for (const auto& v : distinct_labels) out += (out.empty() ? "" : ", ") + ("'" + v + "'");
    return out;
  };
  if (distinct_labels.size() > 2) {
    throw ParseError("label column is not binary; distinct values: " + list_values(), 0,
                     label_col + 1);
  }

  std::vector<std::uint8_t> labels;
  std::vector<double> predictions;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string& cell = rows[r][label_col];
    if (is_missing(cell)) throw ParseError("missing label", r + 1, label_col + 1);
    if (!options.positive_label.empty()) {
      labels.push_back(cell == options.positive_label ? 1 : 0);
    } else if (cell == "1") {
      labels.push_back(1);
    } else if (cell == "0") {
      labels.push_back(0);
    } else {
      throw ParseError("label '" + cell +
                           "' is not 0/1 and no positive label mapping was given; "
                           "distinct values: " + list_values(),
                       r + 1, label_col + 1);
    }
    const std::string& score_cell = rows[r][score_col];
    const auto score = csv::ParseDouble(score_cell);
    if (!score || !std::isfinite(*score)) {
      throw ParseError("score '" + score_cell + "' is not a finite number", r + 1,
                       score_col + 1);
    }
    predictions.push_back(*score);
  }

  std::vector<Attribute> attributes;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == label_col || c == score_col) continue;
    if (std::find(options.ignore_columns.begin(), options.ignore_columns.end(),
                  header[c]) != options.ignore_columns.end()) {
      continue;
    }
    bool numeric = true;
    std::vector<double> values;
    std::vector<std::string> cells;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const std::string& cell = rows[r][c];
      if (is_missing(cell)) {
        values.push_back(std::numeric_limits<double>::quiet_NaN());
        cells.emplace_back();
        continue;
      }
      cells.push_back(cell);
      const auto v = csv::ParseDouble(cell);
      if (numeric && v && std::isfinite(*v)) {
        values.push_back(*v);
      } else {
        numeric = false;
      }
    }
    attributes.push_back(numeric ? Attribute::Numeric(header[c], std::move(values))
                                 : Attribute::Nominal(header[c], cells));
  }
  return Dataset(std::move(attributes), std::move(labels), std::move(predictions),
                 options.label_column, options.score_column);
}

inline Dataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_csv(in, options);
}

// Writes attributes, then label (0/1) and score columns.
inline void write_csv(std::ostream& out, const Dataset& ds) {
  csv::Row header;
  for (const Attribute& a : ds.attributes()) header.push_back(a.name);
  header.push_back(ds.label_name());
  header.push_back(ds.score_name());
  csv::WriteRow(out, header);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    csv::Row row;
    for (const Attribute& a : ds.attributes()) row.push_back(a.CellText(i));
    row.push_back(ds.label(i) ? "1" : "0");
    row.push_back(csv::FormatDouble(ds.prediction(i)));
    csv::WriteRow(out, row);
  }
}

}  // namespace subgroup

#endif  // SUBGROUP_DATASET_HPP_
