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
#include <optional>
#include <span>
#include <string>

#include "plix/hierarchy.hpp"
#include "plix/index.hpp"
#include "plix/pattern_gen.hpp"

namespace plix {

enum class Objective {
  kMinFalsePositiveRate,  // the default, conservative objective
  kMinCoverage,           // most restrictive pattern that is still feasible
};

struct SolverParams {
  double max_fpr = 0.02;          // r: estimated FPR must not exceed this
  std::uint64_t min_coverage = 100;  // m: corpus columns backing the pattern
  double tolerance = 0.05;        // theta: outlier fraction the cut variant may drop
  Objective objective = Objective::kMinFalsePositiveRate;
  std::uint64_t cap = kDefaultEnumerationCap;
  TokenizerOptions tokenizer;
};

struct Suggestion {
  Pattern pattern;
  double fpr = 0.0;
  std::uint64_t cov = 0;
  double train_nonconform_ratio = 0.0;   // fraction of the column the rule ignores
  std::uint64_t train_nonconform_count = 0;
  std::uint64_t train_size = 0;
  bool truncated = false;  // hypothesis enumeration hit the cap
};

// Picks the best validation pattern for a homogeneous query column: the
// objective-minimizing member of the column's hypothesis space that satisfies
// FPR <= max_fpr and coverage >= min_coverage against the index. Patterns the
// index has never seen count as zero-coverage and are infeasible.
//
// Ties are broken deterministically: better objective, then better secondary
// metric (coverage for the FPR objective and vice versa), then the more
// specific pattern (fewer plus/<any> tokens, lower total generality rank),
// then the smaller canonical key.
std::optional<Suggestion> suggest_pattern(std::span<const std::string> column,
                                          const CorpusIndex& index,
                                          const Hierarchy& hierarchy,
                                          const SolverParams& params);

// Horizontal-cut variant for columns polluted with a small fraction of
// ad-hoc values: values are bucketed by coarse shape, the plurality bucket is
// kept when it holds at least (1 - tolerance) of the column, and the
// homogeneous solver runs on the kept values. The returned suggestion records
// the fraction of the full column that does not conform.
std::optional<Suggestion> suggest_pattern_with_cut(std::span<const std::string> column,
                                                   const CorpusIndex& index,
                                                   const Hierarchy& hierarchy,
                                                   const SolverParams& params);

}  // namespace plix
