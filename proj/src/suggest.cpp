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
#include "plix/suggest.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace plix {

namespace {

int rank_sum(const Pattern& pattern, const Hierarchy& hierarchy) {
  int sum = 0;
  for (const TokenClass& cls : pattern.tokens()) sum += hierarchy.generality_rank(cls.kind);
  return sum;
}

struct Candidate {
  const Pattern* pattern;
  IndexEntry entry;
};

// True when `a` beats `b` under the objective and the deterministic
// tie-break chain.
bool better(const Candidate& a, const Candidate& b, Objective objective,
            const Hierarchy& hierarchy) {
  if (objective == Objective::kMinFalsePositiveRate) {
    if (a.entry.fpr != b.entry.fpr) return a.entry.fpr < b.entry.fpr;
    if (a.entry.cov != b.entry.cov) return a.entry.cov > b.entry.cov;
  } else {
    if (a.entry.cov != b.entry.cov) return a.entry.cov < b.entry.cov;
    if (a.entry.fpr != b.entry.fpr) return a.entry.fpr < b.entry.fpr;
  }
  std::size_t la = a.pattern->loose_token_count();
  std::size_t lb = b.pattern->loose_token_count();
  if (la != lb) return la < lb;
  int ra = rank_sum(*a.pattern, hierarchy);
  int rb = rank_sum(*b.pattern, hierarchy);
  if (ra != rb) return ra < rb;
  return a.pattern->key() < b.pattern->key();
}

}  // namespace

std::optional<Suggestion> suggest_pattern(std::span<const std::string> column,
                                          const CorpusIndex& index,
                                          const Hierarchy& hierarchy,
                                          const SolverParams& params) {
  if (column.empty()) throw std::invalid_argument("suggest_pattern: empty column");
  if (params.min_coverage == 0) {
    throw std::invalid_argument("suggest_pattern: min_coverage must be >= 1");
  }

  EnumerationResult hypotheses =
      hypothesis_space(column, hierarchy, params.cap, params.tokenizer);
  std::optional<Candidate> best;
  for (const Pattern& h : hypotheses.patterns) {
    auto entry = index.lookup(h);
    if (!entry) continue;  // unseen pattern: no corpus evidence, infeasible
    if (entry->fpr > params.max_fpr || entry->cov < params.min_coverage) continue;
    Candidate candidate{&h, *entry};
    if (!best || better(candidate, *best, params.objective, hierarchy)) {
      best = candidate;
    }
  }
  if (!best) return std::nullopt;

  Suggestion out;
  out.pattern = *best->pattern;
  out.fpr = best->entry.fpr;
  out.cov = best->entry.cov;
  out.train_nonconform_ratio = 0.0;
  out.train_nonconform_count = 0;
  out.train_size = column.size();
  out.truncated = hypotheses.truncated;
  return out;
}

std::optional<Suggestion> suggest_pattern_with_cut(std::span<const std::string> column,
                                                   const CorpusIndex& index,
                                                   const Hierarchy& hierarchy,
                                                   const SolverParams& params) {
  if (column.empty()) throw std::invalid_argument("suggest_pattern_with_cut: empty column");
  if (params.tolerance <= 0.0 || params.tolerance >= 1.0) {
    throw std::invalid_argument("suggest_pattern_with_cut: tolerance must be in (0, 1)");
  }

  // Bucket values by coarse shape; untokenizable values never conform.
  std::unordered_map<std::string, std::vector<std::string>> buckets;
  for (const std::string& value : column) {
    auto tokens = try_tokenize(value, params.tokenizer);
    if (!tokens) continue;
    buckets[hierarchy.coarse_shape(*tokens).key()].push_back(value);
  }
  const std::string* plurality_key = nullptr;
  const std::vector<std::string>* plurality = nullptr;
  for (const auto& [key, values] : buckets) {
    if (!plurality || values.size() > plurality->size() ||
        (values.size() == plurality->size() && key < *plurality_key)) {
      plurality_key = &key;
      plurality = &values;
    }
  }
  const double required =
      (1.0 - params.tolerance) * static_cast<double>(column.size()) - 1e-9;
  if (!plurality || static_cast<double>(plurality->size()) < required) {
    return std::nullopt;  // no shape dominates within the tolerance
  }

  auto suggestion = suggest_pattern(*plurality, index, hierarchy, params);
  if (!suggestion) return std::nullopt;

  std::uint64_t matched = 0;
  for (const std::string& value : column) {
    if (suggestion->pattern.matches(value, params.tokenizer)) ++matched;
  }
  if (static_cast<double>(matched) < required) return std::nullopt;

  suggestion->train_size = column.size();
  suggestion->train_nonconform_count = column.size() - matched;
  suggestion->train_nonconform_ratio =
      static_cast<double>(suggestion->train_nonconform_count) /
      static_cast<double>(column.size());
  return suggestion;
}

}  // namespace plix
