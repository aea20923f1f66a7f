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
#include "plix/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <nlohmann/json.hpp>
#include <ostream>
#include <unordered_set>

#include "plix/indexer.hpp"
#include "plix/synth.hpp"

namespace plix {

std::vector<BenchmarkCase> make_benchmark(std::span<const ColumnData> columns,
                                          std::size_t value_cap, std::ostream* diag) {
  std::vector<BenchmarkCase> cases;
  for (const ColumnData& column : columns) {
    std::span<const std::string> values = column.values;
    if (value_cap > 0 && values.size() > value_cap) values = values.first(value_cap);
    if (values.size() < 10) {
      if (diag) {
        *diag << "warning: skipping " << column.id << ": needs at least 10 values, has "
              << values.size() << "\n";
      }
      continue;
    }
    std::size_t train_size = values.size() / 10;
    BenchmarkCase c;
    c.id = column.id;
    c.train.assign(values.begin(), values.begin() + train_size);
    c.test.assign(values.begin() + train_size, values.end());
    cases.push_back(std::move(c));
  }
  return cases;
}

EvalReport evaluate(const Algorithm& algorithm, std::span<const BenchmarkCase> benchmark) {
  EvalReport report;
  std::vector<std::optional<ColumnRule>> rules;
  rules.reserve(benchmark.size());
  for (const BenchmarkCase& c : benchmark) rules.push_back(algorithm(c.train));

  auto column_flagged = [](const ColumnRule& rule, const BenchmarkCase& c) {
    for (const std::string& v : c.train) {
      if (!rule(v)) return true;
    }
    for (const std::string& v : c.test) {
      if (!rule(v)) return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < benchmark.size(); ++i) {
    CaseResult result;
    result.id = benchmark[i].id;
    result.has_rule = rules[i].has_value();
    if (!result.has_rule) {
      ++report.no_rule;
      report.cases.push_back(std::move(result));
      continue;
    }
    const ColumnRule& rule = *rules[i];
    result.precision_bit = 1;
    for (const std::string& v : benchmark[i].test) {
      if (!rule(v)) {
        result.precision_bit = 0;
        break;
      }
    }
    if (result.precision_bit == 1 && benchmark.size() > 1) {
      std::size_t flagged = 0;
      for (std::size_t j = 0; j < benchmark.size(); ++j) {
        if (j != i && column_flagged(rule, benchmark[j])) ++flagged;
      }
      result.recall = static_cast<double>(flagged) /
                      static_cast<double>(benchmark.size() - 1);
    }
    // A rule that false-alarms on its own column gets its recall squashed,
    // which the recall initialization above already encodes.
    ++report.evaluated;
    report.precision += result.precision_bit;
    report.recall += result.recall;
    report.cases.push_back(std::move(result));
  }
  if (report.evaluated > 0) {
    report.precision /= static_cast<double>(report.evaluated);
    report.recall /= static_cast<double>(report.evaluated);
  }
  return report;
}

ColumnRule dictionary_rule(const std::vector<std::string>& train) {
  auto dictionary = std::make_shared<std::unordered_set<std::string>>(train.begin(), train.end());
  return [dictionary](const std::string& value) { return dictionary->contains(value); };
}

Algorithm dictionary_algorithm() {
  return [](const std::vector<std::string>& train) -> std::optional<ColumnRule> {
    return dictionary_rule(train);
  };
}

Algorithm pattern_algorithm(const CorpusIndex& index, const Hierarchy& hierarchy,
                            SolverParams params, bool horizontal_cut) {
  return [&index, &hierarchy, params,
          horizontal_cut](const std::vector<std::string>& train) -> std::optional<ColumnRule> {
    auto suggestion = horizontal_cut
                          ? suggest_pattern_with_cut(train, index, hierarchy, params)
                          : suggest_pattern(train, index, hierarchy, params);
    if (!suggestion) return std::nullopt;
    Pattern pattern = suggestion->pattern;
    TokenizerOptions tokenizer = params.tokenizer;
    return ColumnRule([pattern, tokenizer](const std::string& value) {
      return pattern.matches(value, tokenizer);
    });
  };
}

RecoveryResult recovery_simulation(const Pattern& domain, std::size_t corpus_columns,
                                   std::size_t values_per_column, std::size_t query_values,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const Hierarchy& hierarchy) {
  RecoveryResult result;
  result.trials = trials;

  BuildOptions build;
  build.scan.tau = static_cast<std::uint32_t>(domain.size()) + 1;
  SolverParams params;
  params.max_fpr = 0.0;
  params.min_coverage = 1;

  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = seed + t;
    auto corpus = sample_corpus(domain, corpus_columns, values_per_column, trial_seed);
    CorpusIndex index = build_index_from_columns(corpus, hierarchy, build);
    std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ull);
    auto query = sample_column(domain, query_values, rng);
    auto suggestion = suggest_pattern(query, index, hierarchy, params);
    if (suggestion && suggestion->pattern == domain) ++result.recovered;
  }
  return result;
}

PlantedBenchmark make_planted_benchmark(std::size_t domain_count,
                                        std::size_t corpus_columns_per_domain,
                                        std::size_t values_per_column, std::uint64_t seed) {
  PlantedBenchmark out;
  // Distinct (digit length, letter length) pairs make the domains mutually
  // non-matching: a fixed-length class never matches a run of another length.
  for (std::size_t i = 0; out.domains.size() < domain_count; ++i) {
    std::uint32_t digits = static_cast<std::uint32_t>(i / 8 + 1);
    std::uint32_t letters = static_cast<std::uint32_t>(i % 8 + 1);
    out.domains.push_back(Pattern({TokenClass::Fixed(ClassKind::kDigitFixed, digits),
                                   TokenClass::Literal("-"),
                                   TokenClass::Fixed(ClassKind::kLetterFixed, letters)}));
  }
  for (std::size_t d = 0; d < out.domains.size(); ++d) {
    auto columns = sample_corpus(out.domains[d], corpus_columns_per_domain, values_per_column,
                                 seed + d, "domain" + std::to_string(d));
    for (ColumnData& c : columns) out.corpus.push_back(std::move(c));
  }
  for (std::size_t d = 0; d < out.domains.size(); ++d) {
    std::mt19937_64 rng(seed + 0xc0ffee + d);
    ColumnData column{"case" + std::to_string(d),
                      sample_column(out.domains[d], values_per_column, rng)};
    std::vector<ColumnData> one{std::move(column)};
    auto cases = make_benchmark(one);
    out.cases.push_back(std::move(cases.front()));
  }
  return out;
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json doc;
  doc["precision"] = report.precision;
  doc["recall"] = report.recall;
  doc["evaluated"] = report.evaluated;
  doc["no_rule"] = report.no_rule;
  doc["cases"] = nlohmann::json::array();
  for (const CaseResult& c : report.cases) {
    doc["cases"].push_back({{"id", c.id},
                            {"has_rule", c.has_rule},
                            {"precision", c.precision_bit},
                            {"recall", c.recall}});
  }
  return doc.dump();
}

void print_report(std::ostream& out, const std::string& name, const EvalReport& report) {
  out << name << ": precision=" << std::fixed << std::setprecision(4) << report.precision
      << " recall=" << report.recall << " cases=" << report.cases.size()
      << " evaluated=" << report.evaluated << " no-rule=" << report.no_rule << "\n";
  out.unsetf(std::ios::fixed);
}

}  // namespace plix
