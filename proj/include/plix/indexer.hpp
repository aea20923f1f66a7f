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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plix/corpus_io.hpp"
#include "plix/hierarchy.hpp"
#include "plix/index.hpp"
#include "plix/pattern_gen.hpp"

namespace plix {

struct ScanOptions {
  std::uint32_t tau = 8;        // values with token count >= tau are not enumerated
  std::uint64_t cap = 100000;   // per-value enumeration cap
  bool dedup = false;           // compute impurities over distinct values instead
  TokenizerOptions tokenizer;
};

// Per-column result of one offline scan: for every pattern enumerated from
// the column, how many of its values the pattern matches. The impurity of a
// pattern is the fraction of values it does not match.
struct ColumnImpurities {
  std::string column_id;
  std::uint64_t value_count = 0;
  bool truncated = false;
  std::unordered_map<std::string, std::uint64_t> match_counts;

  double impurity_of(const std::string& key) const;
};

// Caches per-value enumerations within one build; corpora are usually heavy
// with repeated values. Not thread-safe: use one cache per worker.
class EnumerationCache {
 public:
  explicit EnumerationCache(std::size_t max_entries = 8192) : max_entries_(max_entries) {}
  const EnumerationResult* find(const std::string& value) const;
  // Stores the result and returns a pointer to it, or returns nullptr without
  // consuming `result` once the cache is full.
  const EnumerationResult* insert(const std::string& value, EnumerationResult&& result);

 private:
  std::size_t max_entries_;
  std::unordered_map<std::string, EnumerationResult> entries_;
};

// Enumerates patterns from every value narrower than tau and counts matches
// against the whole column. Returns nullopt when nothing was enumerable
// (the column is skipped).
std::optional<ColumnImpurities> scan_column(const std::string& column_id,
                                            std::span<const std::string> values,
                                            const Hierarchy& hierarchy,
                                            const ScanOptions& options,
                                            EnumerationCache* cache = nullptr);

// Corpus-level aggregate for one pattern. Impure column contributions are
// kept as exact (non-matching, column-size) pairs so that merging is
// associative and commutative regardless of float rounding; the ratio is
// materialized only when the index is finalized.
struct PatternAggregate {
  std::uint64_t cov = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> impure;  // sorted

  double impurity_sum() const;
  double fpr() const { return cov == 0 ? 0.0 : impurity_sum() / static_cast<double>(cov); }
};

using AggregateMap = std::unordered_map<std::string, PatternAggregate>;

void accumulate(AggregateMap& aggregates, const ColumnImpurities& column);
void merge_aggregates(AggregateMap& into, AggregateMap&& from);
CorpusIndex finalize_index(const AggregateMap& aggregates, const IndexParams& params);

struct BuildOptions {
  ScanOptions scan;
  unsigned workers = 1;
};

struct BuildStats {
  std::uint64_t files = 0;
  std::uint64_t files_failed = 0;
  std::uint64_t columns_scanned = 0;
  std::uint64_t columns_skipped = 0;
  std::uint64_t values = 0;
};

// One full scan of the corpus directory. Unreadable files are skipped with a
// warning on `diag`; a corpus with no usable column is an error.
CorpusIndex build_index(const std::filesystem::path& corpus_dir, const Hierarchy& hierarchy,
                        const BuildOptions& options, BuildStats* stats = nullptr,
                        std::ostream* diag = nullptr);

// In-memory variant used by benchmarks and tests.
CorpusIndex build_index_from_columns(std::span<const ColumnData> columns,
                                     const Hierarchy& hierarchy, const BuildOptions& options,
                                     BuildStats* stats = nullptr);

}  // namespace plix
