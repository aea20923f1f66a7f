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

#include "plix/pattern.hpp"
#include "plix/suggest.hpp"

namespace plix {

enum class TestKind { kFisherExact, kChiSquaredYates };

std::string test_kind_name(TestKind kind);
TestKind test_kind_from_name(std::string_view name);

// A persisted validation rule: the inferred pattern plus the training-time
// non-conforming fraction it is allowed to keep seeing.
struct ValidationRule {
  std::string id;
  Pattern pattern;
  double theta_train = 0.0;
  std::uint64_t train_size = 0;
  // Exact non-conforming count when known; otherwise reconstructed by
  // rounding theta_train * train_size.
  std::optional<std::uint64_t> train_nonconform_count;
  double alpha = 0.01;
  TestKind test = TestKind::kFisherExact;
  TokenizerOptions tokenizer;
};

enum class DriftDirection { kIncrease, kDecrease, kNone };

struct ValidationVerdict {
  double theta_test = 0.0;
  std::uint64_t test_size = 0;
  double p_value = 1.0;
  bool drift_detected = false;
  DriftDirection direction = DriftDirection::kNone;
  TestKind test_used = TestKind::kFisherExact;
};

// Measures the snapshot's non-conforming fraction and runs a two-sample
// homogeneity test against the training fraction. The chi-squared test is
// only honored when every margin of the 2x2 table is at least five;
// otherwise the exact test is used and reported in `test_used`.
ValidationVerdict validate(const ValidationRule& rule, std::span<const std::string> column);

// Wire records (JSON). suggestion_to_rule_json embeds solver params and the
// hierarchy fingerprint so a rule documents how it was produced.
std::string suggestion_to_rule_json(const Suggestion& suggestion, const SolverParams& params,
                                    std::uint32_t tau, const std::string& fingerprint_hex,
                                    double alpha, TestKind test);
ValidationRule rule_from_json_text(std::string_view text);
std::string verdict_to_json(const ValidationVerdict& verdict, const std::string& rule_id);

}  // namespace plix
