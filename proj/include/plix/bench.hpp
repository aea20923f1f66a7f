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
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plix/corpus_io.hpp"
#include "plix/hierarchy.hpp"
#include "plix/index.hpp"
#include "plix/suggest.hpp"

namespace plix {

// One evaluation case: the leading 10% of a column trains a rule, the
// remaining 90% plays the part of future data.
struct BenchmarkCase {
  std::string id;
  std::vector<std::string> train;
  std::vector<std::string> test;
};

// Order-preserving 10/90 prefix splits. Columns shorter than 10 values are
// skipped with a warning on `diag`; `value_cap` (when non-zero) truncates
// each column first.
std::vector<BenchmarkCase> make_benchmark(std::span<const ColumnData> columns,
                                          std::size_t value_cap = 0,
                                          std::ostream* diag = nullptr);

// A learned rule: true accepts a value. A column is flagged when any of its
// values is rejected.
using ColumnRule = std::function<bool(const std::string& value)>;
using Algorithm = std::function<std::optional<ColumnRule>(
    const std::vector<std::string>& train)>;

struct CaseResult {
  std::string id;
  bool has_rule = false;
  int precision_bit = 0;  // 1 when no test value of the own column is flagged
  double recall = 0.0;    // fraction of other cases flagged; 0 when precision is 0
};

struct EvalReport {
  std::vector<CaseResult> cases;
  double precision = 0.0;  // averages over cases that produced a rule
  double recall = 0.0;
  std::uint64_t evaluated = 0;
  std::uint64_t no_rule = 0;
};

EvalReport evaluate(const Algorithm& algorithm, std::span<const BenchmarkCase> benchmark);

// Flags every value missing from the set of distinct training values.
ColumnRule dictionary_rule(const std::vector<std::string>& train);
Algorithm dictionary_algorithm();

// Pattern-mining algorithm backed by a prebuilt index.
Algorithm pattern_algorithm(const CorpusIndex& index, const Hierarchy& hierarchy,
                            SolverParams params, bool horizontal_cut = false);

// Convergence simulation: plants one ground-truth domain, generates `trials`
// corpora of `corpus_columns` columns plus a fresh query column each, and
// reports how often the solver with r = 0, m = 1 returns the planted pattern.
struct RecoveryResult {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;
  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(recovered) / static_cast<double>(trials);
  }
};
RecoveryResult recovery_simulation(const Pattern& domain, std::size_t corpus_columns,
                                   std::size_t values_per_column, std::size_t query_values,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const Hierarchy& hierarchy);

// A benchmark of mutually non-matching planted domains together with the
// corpus its rules are mined from.
struct PlantedBenchmark {
  std::vector<Pattern> domains;
  std::vector<ColumnData> corpus;          // feeds the index
  std::vector<BenchmarkCase> cases;        // one query column per domain
};
PlantedBenchmark make_planted_benchmark(std::size_t domain_count,
                                        std::size_t corpus_columns_per_domain,
                                        std::size_t values_per_column, std::uint64_t seed);

std::string report_to_json(const EvalReport& report);
void print_report(std::ostream& out, const std::string& name, const EvalReport& report);

}  // namespace plix
