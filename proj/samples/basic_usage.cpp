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


// Mines a synthetic dataset for subgroups where the model ranks worse than
// it does overall, then checks the candidates on a held-out split.
//
//   basic_usage [path/to/data.csv label-col score-col]

#include <cstdio>
#include <exception>
#include <string>

#include "subgroup/subgroup.hpp"

int main(int argc, char** argv) {
  using namespace subgroup;
  try {
    Dataset full;
    if (argc == 4) {
      CsvOptions options;
      options.label_column = argv[2];
      options.score_column = argv[3];
      full = load_csv(argv[1], options);
    } else {
      full = SyntheticTabular(3000, 7);
    }

    // Metrics work on plain label/score vectors too.
    const LabeledScoreSet toy({1, 0, 1, 0}, {0.9, 0.8, 0.4, 0.1});
    std::printf("toy ROC AUC %.3f, PR AUC %.3f, ARL %.3f\n", roc_auc(toy), pr_auc(toy), arl(toy));

    const Split3 parts = split3(full, 1);
    const std::vector<Selector> selectors = generate_selectors(parts.search);
    const SelectorIndex search(parts.search, selectors);
    const SelectorIndex validation(parts.validation, selectors);

    SearchConfig cfg;
    cfg.top_k = 20;
    cfg.max_depth = 3;
    cfg.spec.measure = Measure::kRocAuc;
    cfg.spec.alpha = 0.3;
    cfg.spec.beta = 0.3;
    cfg.spec.generalization_aware = true;
    const ResultSet candidates = mine_gen_aware(search, cfg);
    std::printf("%zu candidates, %llu evaluated, %llu pruned\n", candidates.size(),
                static_cast<unsigned long long>(candidates.stats.evaluated),
                static_cast<unsigned long long>(candidates.stats.pruned));

    SignificanceConfig sig;
    sig.n_resamples = 500;
    sig.k_prime = cfg.top_k;
    sig.k = 5;
    sig.seed = 1;
    const SignificanceReport report = significance_filter(candidates, validation, cfg.spec, sig);
    for (const SignificanceEntry& e : report.entries) {
      std::printf("%-40s  q=%.4f  p=%.3f%s\n", e.pattern.description.c_str(),
                  e.pattern.interestingness, e.raw.p, e.significant ? "  *" : "");
    }
    std::printf("%zu of %zu significant\n", report.significant, report.candidates);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
