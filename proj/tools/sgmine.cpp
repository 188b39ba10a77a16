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


// sgmine: command-line front end.
//
//   sgmine mine   --data d.csv --label-col y --score-col p [--significance ...]
//   sgmine inject --data d.csv --label-col y --score-col p --seed 1
//   sgmine skew   --measure arl --axis size --grid 20,50,100 --seed 1
//   sgmine bench  --synthetic 2000 --seed 1
//   sgmine synth  --rows 3000 --seed 1 --out demo.csv
//
// Every subcommand writes its tables into --out-dir. Options may also come
// from a TOML/INI file given with --config; command-line values win.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subgroup/subgroup.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace subgroup;

struct DataOptions {
  std::string path;
  std::string label_col;
  std::string score_col;
  std::string positive_label;
  std::vector<std::string> ignore;
  std::size_t synthetic = 0;
};

struct MineOptions {
  DataOptions data;
  std::string measure = "roc_auc";
  std::string direction = "under";
  std::string strategy = "best-first";
  double alpha = 0.0;
  double beta = 0.0;
  bool gen_aware = false;
  std::size_t top_k = 5;
  std::size_t kprime = 100;
  std::size_t min_size = 20;
  std::size_t depth = 4;
  std::size_t bins = 5;
  bool no_pruning = false;
  bool significance = false;
  std::size_t resamples = 1000;
  std::string correction = "by";
  double sig_level = 0.05;
  bool plus_one = false;
  bool split = false;
  std::string validation;
  std::optional<std::uint64_t> seed;
};

struct InjectOptions {
  DataOptions data;
  std::optional<std::uint64_t> seed;
  std::size_t bins = 5;
  std::size_t max_length = 3;
  double min_frac = 0.004;
  double max_frac = 0.006;
  double min_balance = 0.0;
};

struct SkewOptions {
  std::string measure = "roc_auc";
  std::string axis = "size";
  std::vector<double> grid;
  std::vector<double> corr = {0.0};
  std::size_t repeats = 20;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t fixed_size = 100;
  double fixed_ncr = 0.5;
  std::optional<std::uint64_t> seed;
};

struct BenchOptions {
  DataOptions data;
  std::vector<std::string> measures = {"arl", "pr_auc", "roc_auc"};
  std::vector<double> weights = {0.0, 0.1, 0.3, 1.0};
  std::size_t repeats = 3;
  std::size_t top_k = 5;
  std::size_t depth = 4;
  std::size_t min_size = 20;
  std::size_t bins = 5;
  bool timing = false;
  std::optional<std::uint64_t> seed;
};

struct SynthOptions {
  std::size_t rows = 3000;
  std::string out = "synthetic.csv";
  std::optional<std::uint64_t> seed;
};

struct Global {
  std::string out_dir = ".";
  std::size_t threads = 1;
  bool json_errors = false;
};

Measure MeasureOrThrow(const std::string& text) {
  const auto m = ParseMeasure(text);
  if (!m) throw InvalidArgument("unknown measure '" + text + "' (arl, roc_auc, pr_auc)");
  return *m;
}

std::uint64_t SeedOrThrow(const std::optional<std::uint64_t>& seed, const char* why) {
  if (!seed) throw InvalidArgument(std::string("--seed is required ") + why);
  return *seed;
}

void AddDataOptions(CLI::App* app, DataOptions& d, bool allow_synthetic) {
  app->add_option("--data", d.path, "Input CSV file");
  app->add_option("--label-col", d.label_col, "Column holding the true labels");
  app->add_option("--score-col", d.score_col, "Column holding the classifier scores");
  app->add_option("--positive-label", d.positive_label,
                  "Label value mapped to 1 (default: labels must be 0/1)");
  app->add_option("--ignore-cols", d.ignore, "Columns to leave out")->delimiter(',');
  if (allow_synthetic) {
    app->add_option("--synthetic", d.synthetic,
                    "Use N rows of built-in synthetic data instead of --data");
  }
}

Dataset LoadData(const DataOptions& d, std::optional<std::uint64_t> seed) {
  if (d.synthetic > 0) {
    if (!d.path.empty()) throw InvalidArgument("give either --data or --synthetic, not both");
    return SyntheticTabular(d.synthetic, SeedOrThrow(seed, "for --synthetic"));
  }
  if (d.path.empty()) throw InvalidArgument("--data is required");
  if (d.label_col.empty()) throw InvalidArgument("--label-col is required");
  if (d.score_col.empty()) throw InvalidArgument("--score-col is required");
  CsvOptions opt;
  opt.label_column = d.label_col;
  opt.score_column = d.score_col;
  opt.positive_label = d.positive_label;
  opt.ignore_columns = d.ignore;
  return load_csv(d.path, opt);
}

json DataJson(const DataOptions& d, const Dataset& ds) {
  json j = {{"rows", ds.size()}, {"positives", ds.positives()},
            {"attributes", ds.attributes().size()}};
  if (d.synthetic > 0) {
    j["synthetic"] = d.synthetic;
  } else {
    j["path"] = d.path;
    j["label_col"] = d.label_col;
    j["score_col"] = d.score_col;
  }
  return j;
}

json Manifest(const std::string& command, std::optional<std::uint64_t> seed) {
  return {{"tool", "sgmine"},
          {"version", report::kVersion},
          {"command", command},
          {"seed", seed ? json(*seed) : json()}};
}

std::ofstream OpenOut(const Global& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  const fs::path path = fs::path(g.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  return out;
}

void WriteJson(const Global& g, const std::string& name, const json& j) {
  auto out = OpenOut(g, name);
  out << j.dump(2) << '\n';
}

std::string Fixed(double v) { return csv::FormatFixed(v, 4); }

void PrintSummaryRow(const std::string& name, const report::Summary& s) {
  std::cout << std::left << std::setw(10) << name << std::right << std::setw(4) << s.count
            << std::setw(12) << Fixed(s.mean_cover) << std::setw(10) << Fixed(s.mean_ncr)
            << std::setw(12) << Fixed(s.mean_interestingness) << std::setw(10)
            << (s.mean_pairwise_iou ? Fixed(*s.mean_pairwise_iou) : "-") << '\n';
}

ResultSet Head(const ResultSet& rs, std::size_t k) {
  ResultSet out;
  out.stats = rs.stats;
  for (std::size_t i = 0; i < rs.size() && i < k; ++i) out.patterns.push_back(rs.patterns[i]);
  return out;
}

int RunMine(const MineOptions& o, const Global& g) {
  SearchConfig cfg;
  cfg.spec.measure = MeasureOrThrow(o.measure);
  if (o.direction != "under" && o.direction != "over") {
    throw InvalidArgument("--direction must be 'under' or 'over'");
  }
  cfg.spec.direction = o.direction == "under" ? Direction::kUnder : Direction::kOver;
  if (o.strategy != "best-first" && o.strategy != "dfs") {
    throw InvalidArgument("--strategy must be 'best-first' or 'dfs'");
  }
  cfg.strategy = o.strategy == "dfs" ? Strategy::kDepthFirst : Strategy::kBestFirst;
  cfg.spec.alpha = o.alpha;
  cfg.spec.beta = o.beta;
  cfg.spec.generalization_aware = o.gen_aware;
  cfg.top_k = o.significance ? o.kprime : o.top_k;
  cfg.min_cover = o.min_size;
  cfg.max_depth = o.depth;
  cfg.pruning = !o.no_pruning;
  cfg.threads = g.threads;
  cfg.Validate();

  SignificanceConfig sig;
  sig.n_resamples = o.resamples;
  const auto correction = ParseCorrection(o.correction);
  if (!correction) throw InvalidArgument("--correction must be by, bonferroni or none");
  sig.correction = *correction;
  sig.alpha = o.sig_level;
  sig.k_prime = o.kprime;
  sig.k = o.top_k;
  sig.plus_one = o.plus_one;
  sig.threads = g.threads;
  if (o.significance) {
    sig.seed = SeedOrThrow(o.seed, "with --significance");
    sig.Validate();
    if (!o.split && o.validation.empty()) {
      throw InvalidArgument("--significance needs --split or --validation");
    }
  }
  if (o.split && !o.validation.empty()) {
    throw InvalidArgument("give either --split or --validation, not both");
  }

  const Dataset input = LoadData(o.data, o.seed);
  std::optional<Split3> parts;
  std::optional<Dataset> validation_file;
  if (o.split) parts = split3(input, SeedOrThrow(o.seed, "with --split"));
  const Dataset& search = parts ? parts->search : input;
  const std::vector<Selector> selectors = generate_selectors(search, o.bins);
  if (selectors.empty()) throw InvalidArgument("no selectors could be generated from the data");
  const SelectorIndex index(search, selectors);

  const ResultSet rs = mine(index, cfg);
  std::cerr << "search: " << rs.stats.evaluated << " evaluated, " << rs.stats.pruned
            << " pruned, " << rs.stats.seconds << " s\n";

  json manifest = Manifest("mine", o.seed);
  manifest["data"] = DataJson(o.data, input);
  manifest["search_rows"] = search.size();
  manifest["selectors"] = selectors.size();
  manifest["bins"] = o.bins;
  manifest["search"] = report::ToJson(cfg);
  {
    auto out = OpenOut(g, "results.csv");
    report::WriteResultsCsv(out, rs);
  }
  json results = manifest;
  results.update(report::ToJson(rs));

  const ResultSet top = Head(rs, o.top_k);
  std::cout << std::left << std::setw(10) << "set" << std::right << std::setw(4) << "k"
            << std::setw(12) << "mean_cover" << std::setw(10) << "mean_ncr" << std::setw(12)
            << "mean_score" << std::setw(10) << "mean_iou" << '\n';
  PrintSummaryRow("top-k", report::Summarize(top, index));
  results["summary"] = {{"top_k", report::ToJson(report::Summarize(top, index))}};

  if (o.significance) {
    if (!o.validation.empty()) {
      DataOptions vd = o.data;
      vd.path = o.validation;
      vd.synthetic = 0;
      validation_file = LoadData(vd, o.seed);
    }
    const Dataset& validation = parts ? parts->validation : *validation_file;
    const SelectorIndex validation_index(
        validation, parts ? selectors : TranslateSelectors(selectors, search, validation));
    const auto t0 = std::chrono::steady_clock::now();
    const SignificanceReport rep = significance_filter(rs, validation_index, cfg.spec, sig);
    std::cerr << "significance: "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
    {
      auto out = OpenOut(g, "significance.csv");
      report::WriteSignificanceCsv(out, rep);
    }
    {
      auto out = OpenOut(g, "filtered.csv");
      report::WriteResultsCsv(out, rep.filtered);
    }
    json sj = Manifest("mine", o.seed);
    sj["significance"] = report::ToJson(sig);
    sj["validation_rows"] = validation.size();
    sj.update(report::ToJson(rep));
    WriteJson(g, "significance.json", sj);
    const report::Summary fs = report::Summarize(rep.filtered, index);
    PrintSummaryRow("filtered", fs);
    std::cout << "filtered " << rep.filtered.size() << " / significant " << rep.significant
              << " / candidates " << rep.candidates << " (untestable " << rep.untestable
              << ")\n";
    results["summary"]["filtered"] = report::ToJson(fs);
    results["summary"]["counts"] = {{"filtered", rep.filtered.size()},
                                    {"significant", rep.significant},
                                    {"candidates", rep.candidates}};
  }
  WriteJson(g, "results.json", results);
  return 0;
}

int RunInject(const InjectOptions& o, const Global& g) {
  const std::uint64_t seed = SeedOrThrow(o.seed, "for inject");
  const Dataset ds = LoadData(o.data, o.seed);
  const SelectorIndex index(ds, generate_selectors(ds, o.bins));
  InjectionCandidates opt;
  opt.max_length = o.max_length;
  opt.min_fraction = o.min_frac;
  opt.max_fraction = o.max_frac;
  opt.min_class_balance = o.min_balance;
  opt.require_both_classes = o.min_balance > 0.0;
  const auto candidates = InjectableCandidates(index, opt);
  const Pattern p = pick_injectable(index, seed, opt);
  const Cover c = index.CoverOf(p);
  const Dataset out = inject(ds, c);
  {
    auto f = OpenOut(g, "injected.csv");
    write_csv(f, out);
  }
  json j = Manifest("inject", o.seed);
  j["data"] = DataJson(o.data, ds);
  nlohmann::json ids = nlohmann::json::array();
  for (auto id : p.ids()) ids.push_back(id);
  j["injected"] = {{"pattern", index.Describe(p)},
                   {"selector_ids", ids},
                   {"cover", c.size()},
                   {"positives", c.positives()},
                   {"negatives", c.negatives()},
                   {"fraction", static_cast<double>(c.size()) / static_cast<double>(ds.size())},
                   {"candidates", candidates.size()}};
  j["band"] = {{"max_length", o.max_length}, {"min_fraction", o.min_frac},
               {"max_fraction", o.max_frac}, {"min_class_balance", o.min_balance}};
  WriteJson(g, "injection.json", j);
  std::cout << "injected " << index.Describe(p) << " (cover " << c.size() << ", "
            << candidates.size() << " candidates)\n";
  return 0;
}

int RunSkew(const SkewOptions& o, const Global& g) {
  SkewConfig cfg;
  cfg.measure = MeasureOrThrow(o.measure);
  if (o.axis != "size" && o.axis != "ncr") throw InvalidArgument("--axis must be size or ncr");
  cfg.axis = o.axis == "size" ? SkewAxis::kCoverSize : SkewAxis::kNcr;
  cfg.grid = o.grid;
  if (cfg.grid.empty()) {
    cfg.grid = cfg.axis == SkewAxis::kCoverSize
                   ? std::vector<double>{20, 50, 100, 200, 500, 1000}
                   : std::vector<double>{0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95};
  }
  cfg.correlations = o.corr;
  cfg.repeats = o.repeats;
  cfg.seed = SeedOrThrow(o.seed, "for skew");
  cfg.alpha = o.alpha;
  cfg.beta = o.beta;
  cfg.fixed_size = o.fixed_size;
  cfg.fixed_ncr = o.fixed_ncr;
  const auto cells = skew_surface(cfg);
  {
    auto out = OpenOut(g, "skew.csv");
    report::WriteSkewCsv(out, cfg, cells);
  }
  json j = Manifest("skew", o.seed);
  j["config"] = {{"measure", ToString(cfg.measure)}, {"axis", o.axis},
                 {"grid", cfg.grid},                  {"correlations", cfg.correlations},
                 {"repeats", cfg.repeats},            {"alpha", cfg.alpha},
                 {"beta", cfg.beta},                  {"fixed_size", cfg.fixed_size},
                 {"fixed_ncr", cfg.fixed_ncr},        {"reference_corr", cfg.reference_corr},
                 {"reference_size", cfg.reference_size}, {"reference_ncr", cfg.reference_ncr}};
  WriteJson(g, "skew.json", j);
  std::cout << std::left << std::setw(8) << "corr" << std::setw(8) << "size" << std::setw(8)
            << "ncr" << std::right << std::setw(12) << "mean" << std::setw(12) << "sd" << '\n';
  for (const auto& c : cells) {
    std::cout << std::left << std::setw(8) << csv::FormatDouble(c.corr) << std::setw(8)
              << c.size << std::setw(8) << csv::FormatDouble(c.ncr) << std::right
              << std::setw(12) << Fixed(c.mean) << std::setw(12) << Fixed(c.sd) << '\n';
  }
  return 0;
}

int RunBench(const BenchOptions& o, const Global& g) {
  BenchConfig cfg;
  cfg.measures.clear();
  for (const auto& m : o.measures) cfg.measures.push_back(MeasureOrThrow(m));
  cfg.weights = o.weights;
  cfg.repeats = o.repeats;
  cfg.top_k = o.top_k;
  cfg.max_depth = o.depth;
  cfg.min_cover = o.min_size;
  const Dataset ds = LoadData(o.data, o.seed);
  const SelectorIndex index(ds, generate_selectors(ds, o.bins));
  const auto rows = bench_pruning(index, cfg);
  {
    auto out = OpenOut(g, "bench.csv");
    report::WriteBenchCsv(out, rows);
  }
  if (o.timing) {
    auto out = OpenOut(g, "bench_timing.csv");
    report::WriteBenchTimingCsv(out, rows);
  }
  json j = Manifest("bench", o.seed);
  j["data"] = DataJson(o.data, ds);
  j["config"] = {{"weights", cfg.weights}, {"repeats", cfg.repeats}, {"top_k", cfg.top_k},
                 {"max_depth", cfg.max_depth}, {"min_cover", cfg.min_cover}, {"bins", o.bins}};
  j["selectors"] = index.size();
  WriteJson(g, "bench.json", j);
  bool all_identical = true;
  std::cout << std::left << std::setw(9) << "measure" << std::right << std::setw(7) << "w"
            << std::setw(10) << "nodes" << std::setw(10) << "nodes_np" << std::setw(9)
            << "ratio" << std::setw(11) << "identical" << '\n';
  for (const auto& r : rows) {
    all_identical = all_identical && r.identical;
    std::cout << std::left << std::setw(9) << ToString(r.measure) << std::right << std::setw(7)
              << csv::FormatDouble(r.weight) << std::setw(10) << r.nodes_pruned << std::setw(10)
              << r.nodes_unpruned << std::setw(9) << Fixed(r.node_ratio()) << std::setw(11)
              << (r.identical ? "yes" : "NO") << '\n';
    std::cerr << "bench " << ToString(r.measure) << " w=" << r.weight
              << " median s pruned " << r.median_seconds_pruned << " unpruned "
              << r.median_seconds_unpruned << " speedup " << r.speedup() << '\n';
  }
  return all_identical ? 0 : 3;
}

int RunSynth(const SynthOptions& o, const Global&) {
  const Dataset ds = SyntheticTabular(o.rows, SeedOrThrow(o.seed, "for synth"));
  const fs::path path(o.out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + o.out + "'");
  write_csv(out, ds);
  std::cout << "wrote " << ds.size() << " rows (" << ds.positives() << " positive) to "
            << o.out << '\n';
  return 0;
}

void ReportError(const Global& g, const char* kind, const std::string& message) {
  if (g.json_errors) {
    std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  } else {
    std::cerr << "sgmine: " << message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup discovery for classifier performance (ARL, ROC AUC, PR AUC)"};
  app.set_version_flag("--version", std::string(report::kVersion));
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file (CLI values win)");

  Global g;
  app.add_option("--out-dir", g.out_dir, "Directory for report files")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (1 = deterministic statistics)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json-errors", g.json_errors, "Print errors as JSON on stderr");

  MineOptions mo;
  CLI::App* mine_cmd = app.add_subcommand("mine", "Mine the top-k exceptional subgroups");
  AddDataOptions(mine_cmd, mo.data, true);
  mine_cmd->add_option("--measure", mo.measure, "arl, roc_auc or pr_auc")->capture_default_str();
  mine_cmd->add_option("--direction", mo.direction, "under or over")->capture_default_str();
  mine_cmd->add_option("--strategy", mo.strategy, "best-first or dfs")->capture_default_str();
  mine_cmd->add_option("--alpha", mo.alpha, "Cover size exponent")->capture_default_str();
  mine_cmd->add_option("--beta", mo.beta, "Class balance exponent")->capture_default_str();
  mine_cmd->add_flag("--gen-aware", mo.gen_aware, "Subtract the best generalization's score");
  mine_cmd->add_option("--top-k", mo.top_k, "Patterns to report")->capture_default_str();
  mine_cmd->add_option("--kprime", mo.kprime, "Candidates tested with --significance")
      ->capture_default_str();
  mine_cmd->add_option("--min-size", mo.min_size, "Minimum cover size")->capture_default_str();
  mine_cmd->add_option("--depth", mo.depth, "Maximum pattern length")->capture_default_str();
  mine_cmd->add_option("--bins", mo.bins, "Equal-frequency bins per numeric column")
      ->capture_default_str();
  mine_cmd->add_flag("--no-pruning", mo.no_pruning, "Disable optimistic-estimate pruning");
  mine_cmd->add_flag("--significance", mo.significance, "Filter by holdout p-values");
  mine_cmd->add_option("--resamples", mo.resamples, "Random subsets per p-value")
      ->capture_default_str();
  mine_cmd->add_option("--correction", mo.correction, "by, bonferroni or none")
      ->capture_default_str();
  mine_cmd->add_option("--sig-level", mo.sig_level, "Threshold on adjusted p-values")
      ->capture_default_str();
  mine_cmd->add_flag("--plus-one", mo.plus_one, "Use (r+1)/(n+1) p-values");
  mine_cmd->add_flag("--split", mo.split, "Split the data 3 ways; search and validate on parts");
  mine_cmd->add_option("--validation", mo.validation, "Separate validation CSV");
  mine_cmd->add_option("--seed", mo.seed, "Seed for splitting and resampling");

  InjectOptions io;
  CLI::App* inject_cmd = app.add_subcommand("inject", "Invert predictions inside a random subgroup");
  AddDataOptions(inject_cmd, io.data, true);
  inject_cmd->add_option("--seed", io.seed, "Random seed")->required();
  inject_cmd->add_option("--bins", io.bins, "Equal-frequency bins")->capture_default_str();
  inject_cmd->add_option("--max-length", io.max_length, "Longest candidate pattern")
      ->capture_default_str();
  inject_cmd->add_option("--min-frac", io.min_frac, "Smallest cover fraction")
      ->capture_default_str();
  inject_cmd->add_option("--max-frac", io.max_frac, "Largest cover fraction")
      ->capture_default_str();
  inject_cmd->add_option("--min-balance", io.min_balance, "Minimum class balance of the cover")
      ->capture_default_str();

  SkewOptions so;
  CLI::App* skew_cmd = app.add_subcommand("skew", "Score surfaces on synthetic subgroups");
  skew_cmd->add_option("--measure", so.measure, "arl, roc_auc or pr_auc")->capture_default_str();
  skew_cmd->add_option("--axis", so.axis, "size or ncr")->capture_default_str();
  skew_cmd->add_option("--grid", so.grid, "Grid values along the axis")->delimiter(',');
  skew_cmd->add_option("--corr", so.corr, "Correlations")->delimiter(',');
  skew_cmd->add_option("--repeats", so.repeats, "Repeats per cell")->capture_default_str();
  skew_cmd->add_option("--alpha", so.alpha, "Cover size exponent")->capture_default_str();
  skew_cmd->add_option("--beta", so.beta, "Class balance exponent")->capture_default_str();
  skew_cmd->add_option("--fixed-size", so.fixed_size, "Size on the ncr axis")
      ->capture_default_str();
  skew_cmd->add_option("--fixed-ncr", so.fixed_ncr, "NCR on the size axis")
      ->capture_default_str();
  skew_cmd->add_option("--seed", so.seed, "Random seed")->required();

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Search with and without pruning");
  AddDataOptions(bench_cmd, bo.data, true);
  bench_cmd->add_option("--measures", bo.measures, "Measures")->delimiter(',');
  bench_cmd->add_option("--weights", bo.weights, "alpha = beta values")->delimiter(',');
  bench_cmd->add_option("--repeats", bo.repeats, "Timed repeats")->capture_default_str();
  bench_cmd->add_option("--top-k", bo.top_k, "Patterns to find")->capture_default_str();
  bench_cmd->add_option("--depth", bo.depth, "Maximum pattern length")->capture_default_str();
  bench_cmd->add_option("--min-size", bo.min_size, "Minimum cover size")->capture_default_str();
  bench_cmd->add_option("--bins", bo.bins, "Equal-frequency bins")->capture_default_str();
  bench_cmd->add_flag("--timing", bo.timing, "Also write bench_timing.csv");
  bench_cmd->add_option("--seed", bo.seed, "Random seed")->required();

  SynthOptions yo;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Write a synthetic scored dataset");
  synth_cmd->add_option("--rows", yo.rows, "Rows")->capture_default_str();
  synth_cmd->add_option("--out", yo.out, "Output CSV")->capture_default_str();
  synth_cmd->add_option("--seed", yo.seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (int i = 1; i < argc; ++i) g.json_errors |= std::string(argv[i]) == "--json-errors";
    ReportError(g, "usage", e.what());
    if (!g.json_errors) std::cerr << "Run with --help for usage.\n";
    return 2;
  }

  try {
    if (*mine_cmd) {
      if (mo.data.synthetic == 0 && mo.data.label_col.empty()) {
        ReportError(g, "usage", "--label-col is required");
        return 2;
      }
      return RunMine(mo, g);
    }
    if (*inject_cmd) return RunInject(io, g);
    if (*skew_cmd) return RunSkew(so, g);
    if (*bench_cmd) return RunBench(bo, g);
    if (*synth_cmd) return RunSynth(yo, g);
  } catch (const subgroup::Error& e) {
    ReportError(g, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    ReportError(g, "internal", e.what());
    return 1;
  }
  return 0;
}
