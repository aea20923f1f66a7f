/*
 * Copyright 2026 The plix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plix/bench.hpp"
#include "plix/config.hpp"
#include "plix/corpus_io.hpp"
#include "plix/errors.hpp"
#include "plix/hierarchy.hpp"
#include "plix/index.hpp"
#include "plix/indexer.hpp"
#include "plix/suggest.hpp"
#include "plix/synth.hpp"
#include "plix/validate.hpp"

namespace {

// Exit codes shared by all subcommands. Diagnostics go to stderr; stdout only
// carries machine-readable records.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoRule = 3;
constexpr int kExitDrift = 4;

using plix::Config;

plix::Hierarchy load_hierarchy(const Config& config) {
  if (config.hierarchy_path.empty()) return plix::Hierarchy::standard();
  return plix::Hierarchy::load(config.hierarchy_path);
}

plix::SolverParams solver_params(const Config& config) {
  plix::SolverParams params;
  params.max_fpr = config.r;
  params.min_coverage = config.m;
  params.tolerance = config.theta;
  params.objective = config.objective == "coverage-minimizing"
                         ? plix::Objective::kMinCoverage
                         : plix::Objective::kMinFalsePositiveRate;
  params.cap = config.cap;
  params.tokenizer.merge_decimal = config.merge_decimal;
  return params;
}

int cmd_index(const std::string& corpus_dir, const std::string& index_out,
              const Config& config) {
  plix::Hierarchy hierarchy = load_hierarchy(config);
  plix::BuildOptions options;
  options.scan.tau = config.tau;
  options.scan.cap = config.cap;
  options.scan.dedup = config.dedup;
  options.scan.tokenizer.merge_decimal = config.merge_decimal;
  options.workers = config.workers;

  auto start = std::chrono::steady_clock::now();
  plix::BuildStats stats;
  plix::CorpusIndex index =
      plix::build_index(corpus_dir, hierarchy, options, &stats, &std::cerr);
  index.save(index_out);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cerr << "indexed " << stats.columns_scanned << " columns (" << stats.files
            << " files, " << stats.columns_skipped << " skipped) into " << index.size()
            << " patterns in " << elapsed << " ms\n";
  return kExitOk;
}

int cmd_suggest(const std::string& column_file, const std::string& index_file,
                const Config& config) {
  plix::Hierarchy hierarchy = load_hierarchy(config);
  plix::CorpusIndex index = plix::CorpusIndex::load(index_file);
  if (index.params().hierarchy_fingerprint != hierarchy.fingerprint()) {
    std::cerr << "error: index was built with a different hierarchy (fingerprint mismatch); "
                 "pass the matching --hierarchy file\n";
    return kExitBadInput;
  }

  auto values = plix::read_value_lines(column_file);
  if (values.empty()) {
    std::cerr << "error: column file is empty\n";
    return kExitBadInput;
  }

  plix::SolverParams params = solver_params(config);
  auto suggestion = plix::suggest_pattern(values, index, hierarchy, params);
  if (!suggestion && config.theta > 0.0) {
    suggestion = plix::suggest_pattern_with_cut(values, index, hierarchy, params);
  }
  if (!suggestion) {
    nlohmann::json none{{"rule", nullptr}, {"reason", "no feasible pattern"}};
    std::cout << none.dump() << "\n";
    return kExitNoRule;
  }
  std::cout << plix::suggestion_to_rule_json(
                   *suggestion, params, index.params().tau, hierarchy.fingerprint_hex(),
                   config.alpha, plix::test_kind_from_name(config.test))
            << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& rule_file, const std::string& column_file,
                 const Config& config) {
  std::ifstream in(rule_file);
  if (!in) throw plix::IoError("cannot open rule file: " + rule_file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  plix::ValidationRule rule = plix::rule_from_json_text(text);
  rule.alpha = config.alpha;
  rule.test = plix::test_kind_from_name(config.test);
  rule.tokenizer.merge_decimal = config.merge_decimal;

  auto values = plix::read_value_lines(column_file);
  if (values.empty()) {
    std::cerr << "error: column file is empty\n";
    return kExitBadInput;
  }
  plix::ValidationVerdict verdict = plix::validate(rule, values);
  std::cout << plix::verdict_to_json(verdict, rule.id) << "\n";
  return verdict.drift_detected ? kExitDrift : kExitOk;
}

int cmd_bench(const std::string& bench_dir, const std::string& index_file,
              const std::string& synthetic, std::uint64_t n_columns, std::uint64_t trials,
              std::uint64_t domains, std::uint64_t values_per_column,
              const std::string& baseline, bool as_json, const Config& config) {
  plix::Hierarchy hierarchy = load_hierarchy(config);
  plix::SolverParams params = solver_params(config);

  if (synthetic == "lemma1") {
    plix::Pattern domain({plix::TokenClass::Fixed(plix::ClassKind::kDigitFixed, 3),
                          plix::TokenClass::Literal("-"),
                          plix::TokenClass::Fixed(plix::ClassKind::kLetterFixed, 2)});
    auto result = plix::recovery_simulation(domain, n_columns, values_per_column, 20, trials,
                                            config.seed, hierarchy);
    if (as_json) {
      nlohmann::json doc{{"domain", domain.key()},
                         {"corpus_columns", n_columns},
                         {"trials", result.trials},
                         {"recovered", result.recovered},
                         {"rate", result.rate()}};
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "recovery: domain=" << domain.key() << " n=" << n_columns
                << " trials=" << result.trials << " recovered=" << result.recovered
                << " rate=" << result.rate() << "\n";
    }
    return kExitOk;
  }

  std::vector<plix::BenchmarkCase> cases;
  plix::CorpusIndex index;
  if (synthetic == "planted") {
    auto planted = plix::make_planted_benchmark(domains, n_columns, values_per_column,
                                                config.seed);
    plix::BuildOptions build;
    build.scan.tau = config.tau;
    build.scan.cap = config.cap;
    build.workers = config.workers;
    index = plix::build_index_from_columns(planted.corpus, hierarchy, build);
    cases = std::move(planted.cases);
  } else if (!synthetic.empty()) {
    std::cerr << "error: unknown synthetic benchmark '" << synthetic
              << "' (expected lemma1 or planted)\n";
    return kExitBadInput;
  } else {
    if (bench_dir.empty() || index_file.empty()) {
      std::cerr << "error: bench needs a benchmark directory and --index, or --synthetic\n";
      return kExitBadInput;
    }
    index = plix::CorpusIndex::load(index_file);
    if (index.params().hierarchy_fingerprint != hierarchy.fingerprint()) {
      std::cerr << "error: index was built with a different hierarchy\n";
      return kExitBadInput;
    }
    std::vector<plix::ColumnData> columns;
    for (const auto& rel : plix::list_corpus_files(bench_dir)) {
      for (auto& col : plix::read_column_file(std::filesystem::path(bench_dir) / rel,
                                              rel.string())) {
        columns.push_back(std::move(col));
      }
    }
    cases = plix::make_benchmark(columns, config.value_cap, &std::cerr);
  }

  bool use_cut = config.theta > 0.0;
  auto report =
      plix::evaluate(plix::pattern_algorithm(index, hierarchy, params, use_cut), cases);
  if (as_json) {
    nlohmann::json doc;
    doc["pattern"] = nlohmann::json::parse(plix::report_to_json(report));
    if (baseline == "dictionary") {
      doc["dictionary"] =
          nlohmann::json::parse(plix::report_to_json(plix::evaluate(plix::dictionary_algorithm(), cases)));
    }
    std::cout << doc.dump() << "\n";
  } else {
    plix::print_report(std::cout, "pattern", report);
    if (baseline == "dictionary") {
      plix::print_report(std::cout, "dictionary",
                         plix::evaluate(plix::dictionary_algorithm(), cases));
    }
  }
  return kExitOk;
}

int cmd_inspect(const std::string& index_file, bool as_json) {
  plix::CorpusIndex index = plix::CorpusIndex::load(index_file);
  // Coverage histogram over power-of-two buckets.
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& [key, entry] : index.table()) {
    std::uint64_t bucket = 1;
    while (bucket * 2 <= entry.cov) bucket *= 2;
    ++histogram[bucket];
  }
  static const char* kHex = "0123456789abcdef";
  std::string fp;
  for (std::uint8_t b : index.params().hierarchy_fingerprint) {
    fp.push_back(kHex[b >> 4]);
    fp.push_back(kHex[b & 0xf]);
  }
  if (as_json) {
    nlohmann::json doc;
    doc["patterns"] = index.size();
    doc["tau"] = index.params().tau;
    doc["cap"] = index.params().cap;
    doc["hierarchy_fingerprint"] = fp;
    doc["coverage_histogram"] = nlohmann::json::object();
    for (const auto& [bucket, count] : histogram) {
      doc["coverage_histogram"][std::to_string(bucket)] = count;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "patterns: " << index.size() << "\n"
              << "tau: " << index.params().tau << "\n"
              << "cap: " << index.params().cap << "\n"
              << "hierarchy: " << fp << "\n"
              << "coverage histogram (bucket = lower bound):\n";
    for (const auto& [bucket, count] : histogram) {
      std::cout << "  >=" << bucket << ": " << count << "\n";
    }
  }
  return kExitOk;
}

void add_config_flags(CLI::App* cmd, Config& config, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file (default: $PLIX_CONFIG)");
  cmd->add_option("--tau", config.tau, "max token count for offline enumeration");
  cmd->add_option("--cap", config.cap, "per-value pattern enumeration cap");
  cmd->add_option("--r", config.r, "max estimated FPR for suggested rules");
  cmd->add_option("--m", config.m, "min corpus coverage for suggested rules");
  cmd->add_option("--theta", config.theta, "outlier tolerance; 0 disables horizontal cuts");
  cmd->add_option("--alpha", config.alpha, "significance level for drift tests");
  cmd->add_option("--test", config.test, "fisher-exact or chi-squared-yates");
  cmd->add_option("--objective", config.objective,
                  "fpr-minimizing or coverage-minimizing");
  cmd->add_option("--hierarchy", config.hierarchy_path, "hierarchy config JSON");
  cmd->add_option("--workers", config.workers, "worker threads for indexing");
  cmd->add_option("--value-cap", config.value_cap, "benchmark per-column value cap");
  cmd->add_option("--seed", config.seed, "seed for synthetic data");
  cmd->add_flag("--dedup", config.dedup, "deduplicate column values before scanning");
  cmd->add_flag("--merge-decimal", config.merge_decimal,
                "tokenize digits '.' digits as one numeric run");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plix: corpus-driven validation patterns for string columns"};
  app.require_subcommand(1);

  Config config;
  std::string config_path;
  if (const char* env = std::getenv("PLIX_CONFIG")) config_path = env;

  std::string corpus_dir, index_out, column_file, index_file, rule_file, bench_dir;
  std::string synthetic, baseline;
  std::uint64_t n_columns = 20, trials = 100, domains = 50, values_per_column = 100;
  bool as_json = false;

  CLI::App* index_cmd = app.add_subcommand("index", "scan a corpus into a pattern index");
  index_cmd->add_option("corpus_dir", corpus_dir)->required();
  index_cmd->add_option("index_out", index_out)->required();
  add_config_flags(index_cmd, config, config_path);

  CLI::App* suggest_cmd =
      app.add_subcommand("suggest", "infer a validation rule for a column");
  suggest_cmd->add_option("column_file", column_file)->required();
  suggest_cmd->add_option("index_file", index_file)->required();
  add_config_flags(suggest_cmd, config, config_path);

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "test a column snapshot against a rule");
  validate_cmd->add_option("rule_file", rule_file)->required();
  validate_cmd->add_option("column_file", column_file)->required();
  add_config_flags(validate_cmd, config, config_path);

  CLI::App* bench_cmd = app.add_subcommand("bench", "run the evaluation harness");
  bench_cmd->add_option("benchmark_dir", bench_dir);
  bench_cmd->add_option("--index", index_file, "index file for rule inference");
  bench_cmd->add_option("--synthetic", synthetic, "lemma1 or planted");
  bench_cmd->add_option("--n", n_columns, "corpus columns (per domain)");
  bench_cmd->add_option("--trials", trials, "lemma1 trial count");
  bench_cmd->add_option("--domains", domains, "planted domain count");
  bench_cmd->add_option("--values", values_per_column, "values per column");
  bench_cmd->add_option("--baseline", baseline, "also evaluate a baseline (dictionary)");
  bench_cmd->add_flag("--json", as_json, "machine-readable report");
  add_config_flags(bench_cmd, config, config_path);

  CLI::App* inspect_cmd = app.add_subcommand("inspect", "dump index statistics");
  inspect_cmd->add_option("index_file", index_file)->required();
  inspect_cmd->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      Config file_config;
      file_config.load_file(config_path);
      // Flags win over the file: re-parse moves flag values on top.
      Config merged = file_config;
      // CLI11 already wrote flag values into `config`; copy only options the
      // user did not pass by starting from the file values.
      CLI::App* active = app.get_subcommands().front();
      auto passed = [&](const std::string& name) {
        auto* opt = active->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
      };
      if (!passed("--tau")) config.tau = merged.tau;
      if (!passed("--cap")) config.cap = merged.cap;
      if (!passed("--r")) config.r = merged.r;
      if (!passed("--m")) config.m = merged.m;
      if (!passed("--theta")) config.theta = merged.theta;
      if (!passed("--alpha")) config.alpha = merged.alpha;
      if (!passed("--test")) config.test = merged.test;
      if (!passed("--objective")) config.objective = merged.objective;
      if (!passed("--hierarchy")) config.hierarchy_path = merged.hierarchy_path;
      if (!passed("--workers")) config.workers = merged.workers;
      if (!passed("--value-cap")) config.value_cap = merged.value_cap;
      if (!passed("--seed")) config.seed = merged.seed;
      if (!passed("--dedup")) config.dedup = merged.dedup;
      if (!passed("--merge-decimal")) config.merge_decimal = merged.merge_decimal;
    }
    config.validate();

    if (app.got_subcommand(index_cmd)) return cmd_index(corpus_dir, index_out, config);
    if (app.got_subcommand(suggest_cmd)) return cmd_suggest(column_file, index_file, config);
    if (app.got_subcommand(validate_cmd)) return cmd_validate(rule_file, column_file, config);
    if (app.got_subcommand(bench_cmd)) {
      return cmd_bench(bench_dir, index_file, synthetic, n_columns, trials, domains,
                       values_per_column, baseline, as_json, config);
    }
    if (app.got_subcommand(inspect_cmd)) return cmd_inspect(index_file, as_json);
  } catch (const plix::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
