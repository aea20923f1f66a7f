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
#include <span>
#include <string>
#include <vector>

#include "plix/hierarchy.hpp"
#include "plix/pattern.hpp"
#include "plix/tokenizer.hpp"

namespace plix {

struct EnumerationResult {
  std::vector<Pattern> patterns;
  bool truncated = false;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

// All patterns consistent with `value`: the cross product of each token's
// generalization set. When the product exceeds `cap` the result is cut to the
// `cap` shallowest patterns (lowest total generality rank, then stable index
// order) and flagged as truncated.
EnumerationResult enumerate_value_patterns(std::string_view value, const Hierarchy& hierarchy,
                                           std::uint64_t cap = kDefaultEnumerationCap,
                                           const TokenizerOptions& opts = {});

// Patterns consistent with every value of the column, with the trivial
// all-<any> pattern removed. Computed by enumerating the value with the
// smallest pattern space and filtering against the rest.
EnumerationResult hypothesis_space(std::span<const std::string> column,
                                   const Hierarchy& hierarchy,
                                   std::uint64_t cap = kDefaultEnumerationCap,
                                   const TokenizerOptions& opts = {});

// Two-phase column profiling: values are first bucketed by shape and coarse
// patterns kept when they cover at least `coverage_fraction` of the column;
// retained shapes are then specialized downward, keeping every pattern that
// still meets the threshold. At full coverage this equals hypothesis_space.
EnumerationResult generate_column_patterns(std::span<const std::string> column,
                                           double coverage_fraction,
                                           const Hierarchy& hierarchy,
                                           std::uint64_t cap = kDefaultEnumerationCap,
                                           const TokenizerOptions& opts = {});

}  // namespace plix
