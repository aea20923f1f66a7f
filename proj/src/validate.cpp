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
#include "plix/validate.hpp"

#include <openssl/sha.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "plix/stats.hpp"

namespace plix {

std::string test_kind_name(TestKind kind) {
  return kind == TestKind::kFisherExact ? "fisher-exact" : "chi-squared-yates";
}

TestKind test_kind_from_name(std::string_view name) {
  if (name == "fisher-exact") return TestKind::kFisherExact;
  if (name == "chi-squared-yates") return TestKind::kChiSquaredYates;
  throw std::invalid_argument("unknown test kind: " + std::string(name));
}

ValidationVerdict validate(const ValidationRule& rule, std::span<const std::string> column) {
  if (column.empty()) throw std::invalid_argument("validate: empty column");
  if (rule.train_size == 0) throw std::invalid_argument("validate: empty training side");
  if (rule.alpha <= 0.0 || rule.alpha >= 1.0) {
    throw std::invalid_argument("validate: alpha must be in (0, 1)");
  }

  std::uint64_t nonconforming = 0;
  for (const std::string& value : column) {
    if (!rule.pattern.matches(value, rule.tokenizer)) ++nonconforming;
  }

  const std::uint64_t n1 = rule.train_size;
  const std::uint64_t k1 =
      rule.train_nonconform_count
          ? *rule.train_nonconform_count
          : static_cast<std::uint64_t>(std::llround(rule.theta_train * static_cast<double>(n1)));
  if (k1 > n1) throw std::invalid_argument("validate: training counts are inconsistent");
  const std::uint64_t n2 = column.size();
  const std::uint64_t k2 = nonconforming;

  // Rows: train/test. Columns: conforming/non-conforming.
  const std::uint64_t a = n1 - k1, b = k1, c = n2 - k2, d = k2;

  ValidationVerdict verdict;
  verdict.theta_test = static_cast<double>(k2) / static_cast<double>(n2);
  verdict.test_size = n2;
  verdict.test_used = rule.test;
  if (rule.test == TestKind::kChiSquaredYates) {
    const std::uint64_t min_margin = std::min({a + b, c + d, a + c, b + d});
    if (min_margin < 5) verdict.test_used = TestKind::kFisherExact;
  }
  verdict.p_value = verdict.test_used == TestKind::kChiSquaredYates
                        ? chi_squared_yates(a, b, c, d)
                        : fisher_exact_two_tailed(a, b, c, d);
  verdict.drift_detected = verdict.p_value < rule.alpha;
  const double theta_train_actual =
      static_cast<double>(k1) / static_cast<double>(n1);
  if (verdict.theta_test > theta_train_actual) {
    verdict.direction = DriftDirection::kIncrease;
  } else if (verdict.theta_test < theta_train_actual) {
    verdict.direction = DriftDirection::kDecrease;
  } else {
    verdict.direction = DriftDirection::kNone;
  }
  return verdict;
}

namespace {

std::string short_digest(const std::string& text) {
  std::array<std::uint8_t, 32> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest.data());
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < 6; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace

std::string suggestion_to_rule_json(const Suggestion& suggestion, const SolverParams& params,
                                    std::uint32_t tau, const std::string& fingerprint_hex,
                                    double alpha, TestKind test) {
  nlohmann::json doc;
  doc["id"] = short_digest(suggestion.pattern.key() + "|" + fingerprint_hex);
  doc["pattern"] = suggestion.pattern.key();
  doc["fpr"] = suggestion.fpr;
  doc["cov"] = suggestion.cov;
  doc["theta_train"] = suggestion.train_nonconform_ratio;
  doc["theta_train_count"] = suggestion.train_nonconform_count;
  doc["train_size"] = suggestion.train_size;
  doc["truncated"] = suggestion.truncated;
  doc["alpha"] = alpha;
  doc["test"] = test_kind_name(test);
  doc["params"] = {
      {"r", params.max_fpr},
      {"m", params.min_coverage},
      {"theta", params.tolerance},
      {"objective", params.objective == Objective::kMinFalsePositiveRate
                        ? "fpr-minimizing"
                        : "coverage-minimizing"},
      {"tau", tau},
      {"cap", params.cap},
  };
  doc["hierarchy_fingerprint"] = fingerprint_hex;
  return doc.dump();
}

ValidationRule rule_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed rule record: ") + e.what());
  }
  ValidationRule rule;
  try {
    rule.id = doc.value("id", std::string());
    rule.pattern = Pattern::parse(doc.at("pattern").get<std::string>());
    rule.theta_train = doc.at("theta_train").get<double>();
    rule.train_size = doc.at("train_size").get<std::uint64_t>();
    if (doc.contains("theta_train_count")) {
      rule.train_nonconform_count = doc["theta_train_count"].get<std::uint64_t>();
    }
    if (doc.contains("alpha")) rule.alpha = doc["alpha"].get<double>();
    if (doc.contains("test")) rule.test = test_kind_from_name(doc["test"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed rule record: ") + e.what());
  }
  if (rule.theta_train < 0.0 || rule.theta_train > 1.0 || rule.train_size == 0) {
    throw std::invalid_argument("malformed rule record: bad training stats");
  }
  return rule;
}

std::string verdict_to_json(const ValidationVerdict& verdict, const std::string& rule_id) {
  nlohmann::json doc;
  doc["rule_id"] = rule_id;
  doc["theta_test"] = verdict.theta_test;
  doc["test_size"] = verdict.test_size;
  doc["p_value"] = verdict.p_value;
  doc["drift_detected"] = verdict.drift_detected;
  switch (verdict.direction) {
    case DriftDirection::kIncrease: doc["direction"] = "increase"; break;
    case DriftDirection::kDecrease: doc["direction"] = "decrease"; break;
    case DriftDirection::kNone: doc["direction"] = "none"; break;
  }
  doc["test"] = test_kind_name(verdict.test_used);
  return doc.dump();
}

}  // namespace plix
