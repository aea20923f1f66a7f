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
#include "plix/indexer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace plix {

double ColumnImpurities::impurity_of(const std::string& key) const {
  auto it = match_counts.find(key);
  if (it == match_counts.end() || value_count == 0) return 1.0;
  std::uint64_t non_matching = value_count - it->second;
  return static_cast<double>(non_matching) / static_cast<double>(value_count);
}

const EnumerationResult* EnumerationCache::find(const std::string& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? nullptr : &it->second;
}

const EnumerationResult* EnumerationCache::insert(const std::string& value,
                                                  EnumerationResult&& result) {
  if (entries_.size() >= max_entries_) return nullptr;
  return &entries_.emplace(value, std::move(result)).first->second;
}

std::optional<ColumnImpurities> scan_column(const std::string& column_id,
                                            std::span<const std::string> values,
                                            const Hierarchy& hierarchy,
                                            const ScanOptions& options,
                                            EnumerationCache* cache) {
  if (options.tau == 0) throw std::invalid_argument("scan_column: tau must be >= 1");

  struct Distinct {
    const std::string* value;
    std::uint64_t mult;
    bool narrow = false;     // token count < tau
    bool truncated = false;  // enumeration hit the cap
  };
  std::vector<Distinct> distinct;
  {
    std::unordered_map<std::string_view, std::size_t> seen;
    for (const std::string& v : values) {
      auto it = seen.find(v);
      if (it == seen.end()) {
        seen.emplace(v, distinct.size());
        distinct.push_back({&v, 1});
      } else if (!options.dedup) {
        ++distinct[it->second].mult;
      }
    }
  }

  ColumnImpurities out;
  out.column_id = column_id;
  for (const Distinct& d : distinct) out.value_count += d.mult;

  // Key sets of cap-truncated values, kept for the second pass below.
  std::vector<std::pair<std::size_t, std::unordered_set<std::string>>> truncated_sets;

  bool any_enumerated = false;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    Distinct& d = distinct[i];
    std::size_t width = token_count(*d.value, options.tokenizer);
    if (width == 0 || width >= options.tau) continue;
    d.narrow = true;

    const EnumerationResult* enumerated = cache ? cache->find(*d.value) : nullptr;
    EnumerationResult scratch;
    if (!enumerated) {
      scratch = enumerate_value_patterns(*d.value, hierarchy, options.cap, options.tokenizer);
      const EnumerationResult* stored =
          cache ? cache->insert(*d.value, std::move(scratch)) : nullptr;
      enumerated = stored ? stored : &scratch;
    }
    any_enumerated = true;
    d.truncated = enumerated->truncated;
    out.truncated = out.truncated || enumerated->truncated;
    for (const Pattern& p : enumerated->patterns) {
      out.match_counts[p.key()] += d.mult;
    }
    if (d.truncated) {
      std::unordered_set<std::string> own;
      own.reserve(enumerated->patterns.size());
      for (const Pattern& p : enumerated->patterns) own.insert(p.key());
      truncated_sets.emplace_back(i, std::move(own));
    }
  }
  if (!any_enumerated) return std::nullopt;

  // A complete enumeration of a narrow value doubles as its match oracle: a
  // pattern matches the value exactly when it appears in the value's pattern
  // set. Cap-truncated values still need explicit matching against patterns
  // the cut dropped.
  for (const auto& [idx, own] : truncated_sets) {
    const Distinct& d = distinct[idx];
    auto tokens = tokenize(*d.value, options.tokenizer);
    for (auto& [key, count] : out.match_counts) {
      if (own.contains(key)) continue;
      if (Pattern::parse(key).matches(tokens)) count += d.mult;
    }
  }
  return out;
}

double PatternAggregate::impurity_sum() const {
  double sum = 0.0;
  for (const auto& [non_matching, size] : impure) {
    sum += static_cast<double>(non_matching) / static_cast<double>(size);
  }
  return sum;
}

void accumulate(AggregateMap& aggregates, const ColumnImpurities& column) {
  for (const auto& [key, match_count] : column.match_counts) {
    PatternAggregate& agg = aggregates[key];
    ++agg.cov;
    std::uint64_t non_matching = column.value_count - match_count;
    if (non_matching > 0) {
      std::pair<std::uint32_t, std::uint32_t> item{
          static_cast<std::uint32_t>(non_matching),
          static_cast<std::uint32_t>(column.value_count)};
      auto pos = std::upper_bound(agg.impure.begin(), agg.impure.end(), item);
      agg.impure.insert(pos, item);
    }
  }
}

void merge_aggregates(AggregateMap& into, AggregateMap&& from) {
  for (auto& [key, agg] : from) {
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(key, std::move(agg));
      continue;
    }
    PatternAggregate& dst = it->second;
    dst.cov += agg.cov;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> merged;
    merged.reserve(dst.impure.size() + agg.impure.size());
    std::merge(dst.impure.begin(), dst.impure.end(), agg.impure.begin(), agg.impure.end(),
               std::back_inserter(merged));
    dst.impure = std::move(merged);
  }
}

CorpusIndex finalize_index(const AggregateMap& aggregates, const IndexParams& params) {
  std::unordered_map<std::string, IndexEntry> table;
  table.reserve(aggregates.size());
  for (const auto& [key, agg] : aggregates) {
    table.emplace(key, IndexEntry{agg.fpr(), agg.cov});
  }
  return CorpusIndex(params, std::move(table));
}

namespace {

struct FileScanResult {
  AggregateMap aggregates;
  BuildStats stats;
};

void scan_columns_into(std::span<const ColumnData> columns, const Hierarchy& hierarchy,
                       const ScanOptions& options, EnumerationCache& cache,
                       FileScanResult& result) {
  for (const ColumnData& column : columns) {
    if (column.values.empty()) {
      ++result.stats.columns_skipped;
      continue;
    }
    result.stats.values += column.values.size();
    auto impurities = scan_column(column.id, column.values, hierarchy, options, &cache);
    if (!impurities) {
      ++result.stats.columns_skipped;
      continue;
    }
    ++result.stats.columns_scanned;
    accumulate(result.aggregates, *impurities);
  }
}

}  // namespace

CorpusIndex build_index(const std::filesystem::path& corpus_dir, const Hierarchy& hierarchy,
                        const BuildOptions& options, BuildStats* stats, std::ostream* diag) {
  auto files = list_corpus_files(corpus_dir);
  unsigned workers = std::max(1u, options.workers);
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(files.size(), 1)));

  std::vector<FileScanResult> partials(workers);
  std::atomic<std::size_t> next{0};
  std::mutex diag_mutex;

  auto worker_body = [&](unsigned worker_id) {
    EnumerationCache cache;
    FileScanResult& result = partials[worker_id];
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size()) break;
      ++result.stats.files;
      std::vector<ColumnData> columns;
      try {
        columns = read_column_file(corpus_dir / files[i], files[i].string());
      } catch (const std::exception& e) {
        ++result.stats.files_failed;
        if (diag) {
          std::lock_guard<std::mutex> lock(diag_mutex);
          *diag << "warning: skipping " << files[i].string() << ": " << e.what() << "\n";
        }
        continue;
      }
      scan_columns_into(columns, hierarchy, options.scan, cache, result);
    }
  };

  if (workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker_body, w);
    for (std::thread& t : threads) t.join();
  }

  AggregateMap aggregates;
  BuildStats total;
  for (FileScanResult& partial : partials) {
    total.files += partial.stats.files;
    total.files_failed += partial.stats.files_failed;
    total.columns_scanned += partial.stats.columns_scanned;
    total.columns_skipped += partial.stats.columns_skipped;
    total.values += partial.stats.values;
    merge_aggregates(aggregates, std::move(partial.aggregates));
  }
  if (stats) *stats = total;
  if (total.columns_scanned == 0) {
    throw std::runtime_error("no usable columns in corpus: " + corpus_dir.string());
  }

  IndexParams params{options.scan.tau, options.scan.cap, hierarchy.fingerprint()};
  return finalize_index(aggregates, params);
}

CorpusIndex build_index_from_columns(std::span<const ColumnData> columns,
                                     const Hierarchy& hierarchy, const BuildOptions& options,
                                     BuildStats* stats) {
  EnumerationCache cache;
  FileScanResult result;
  scan_columns_into(columns, hierarchy, options.scan, cache, result);
  if (stats) *stats = result.stats;
  if (result.stats.columns_scanned == 0) {
    throw std::runtime_error("no usable columns in corpus");
  }
  IndexParams params{options.scan.tau, options.scan.cap, hierarchy.fingerprint()};
  return finalize_index(result.aggregates, params);
}

}  // namespace plix
