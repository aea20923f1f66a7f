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
#include "plix/pattern_gen.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "plix/synth.hpp"

namespace plix {
namespace {

std::set<std::string> keys_of(const std::vector<Pattern>& patterns) {
  std::set<std::string> keys;
  for (const Pattern& p : patterns) keys.insert(p.key());
  return keys;
}

TEST(EnumerateValuePatterns, ClockValueContainsTheExpectedPatterns) {
  Hierarchy h = Hierarchy::standard();
  auto result = enumerate_value_patterns("9:07", h);
  ASSERT_FALSE(result.truncated);
  auto keys = keys_of(result.patterns);
  EXPECT_TRUE(keys.contains("<digit>:<digit>{2}"));
  EXPECT_TRUE(keys.contains("<digit>+:<digit>{2}"));
  EXPECT_TRUE(keys.contains("<digit>:<digit>+"));
  EXPECT_TRUE(keys.contains("<num>:<digit>+"));
  EXPECT_TRUE(keys.contains("9:<digit>{2}"));
}

TEST(EnumerateValuePatterns, ClockValueCountMatchesBruteForce) {
  // 7 choices for "9", 2 for ":", 7 for "07" with the stock hierarchy.
  Hierarchy h = Hierarchy::standard();
  auto result = enumerate_value_patterns("9:07", h);
  EXPECT_EQ(result.patterns.size(), 98u);
  EXPECT_EQ(keys_of(result.patterns), plixtest::oracle_enumerate_keys("9:07"));
}

TEST(EnumerateValuePatterns, SingleSymbol) {
  Hierarchy h = Hierarchy::standard();
  auto result = enumerate_value_patterns("-", h);
  EXPECT_EQ(keys_of(result.patterns), (std::set<std::string>{"-", "<any>"}));
}

TEST(EnumerateValuePatterns, EveryPatternMatchesItsValue) {
  Hierarchy h = Hierarchy::standard();
  std::mt19937_64 rng(5);
  std::vector<Pattern> domains = {
      Pattern::parse("<digit>+:<digit>{2}"),
      Pattern::parse("<letter>{3} <digit>{2} <digit>{4}"),
      Pattern::parse("<alphanum>+-<alphanum>+"),
  };
  for (const Pattern& domain : domains) {
    for (int i = 0; i < 10; ++i) {
      std::string value = sample_value(domain, rng);
      auto result = enumerate_value_patterns(value, h);
      ASSERT_FALSE(result.truncated);
      for (const Pattern& p : result.patterns) {
        ASSERT_TRUE(p.matches(value)) << p.key() << " should match " << value;
      }
      EXPECT_EQ(keys_of(result.patterns), plixtest::oracle_enumerate_keys(value)) << value;
    }
  }
}

TEST(EnumerateValuePatterns, TruncationIsDeterministicAndShallowFirst) {
  Hierarchy h = Hierarchy::standard();
  const std::string value = "9/12/2019 12:01:32 PM";  // full space is ~24M patterns
  auto a = enumerate_value_patterns(value, h, 5000);
  auto b = enumerate_value_patterns(value, h, 5000);
  ASSERT_TRUE(a.truncated);
  ASSERT_EQ(a.patterns.size(), 5000u);
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    ASSERT_EQ(a.patterns[i].key(), b.patterns[i].key());
  }
  // Rank sums are non-decreasing along the emission order.
  auto rank_sum = [&](const Pattern& p) {
    int sum = 0;
    for (const TokenClass& cls : p.tokens()) sum += h.generality_rank(cls.kind);
    return sum;
  };
  for (std::size_t i = 1; i < a.patterns.size(); ++i) {
    ASSERT_LE(rank_sum(a.patterns[i - 1]), rank_sum(a.patterns[i]));
  }
  // A larger cap extends the sequence without reordering it.
  auto larger = enumerate_value_patterns(value, h, 8000);
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    ASSERT_EQ(larger.patterns[i].key(), a.patterns[i].key());
  }
}

TEST(HypothesisSpace, MixedShapesShareNothing) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"9:07", "hello"};
  EXPECT_TRUE(hypothesis_space(column, h).patterns.empty());
}

TEST(HypothesisSpace, TwoDigitHourForcesPlus) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"10:02", "9:07"};
  auto keys = keys_of(hypothesis_space(column, h).patterns);
  EXPECT_TRUE(keys.contains("<digit>+:<digit>{2}"));
  EXPECT_FALSE(keys.contains("<digit>:<digit>{2}"));
  EXPECT_EQ(keys, plixtest::oracle_hypothesis_keys(column));
}

TEST(HypothesisSpace, ExcludesTrivialPattern) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"a", "a", "a"};
  auto keys = keys_of(hypothesis_space(column, h).patterns);
  EXPECT_FALSE(keys.contains("<any>"));
  EXPECT_TRUE(keys.contains("a"));
  EXPECT_EQ(keys.size(), 5u);
}

TEST(HypothesisSpace, UntokenizableValueEmptiesTheSpace) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"a", ""};
  EXPECT_TRUE(hypothesis_space(column, h).patterns.empty());
}

TEST(HypothesisSpace, MatchesBruteForceOnRandomColumns) {
  Hierarchy h = Hierarchy::standard();
  std::mt19937_64 rng(17);
  std::vector<Pattern> domains = {
      Pattern::parse("<digit>+:<digit>{2}"),
      Pattern::parse("<letter>{2}-<digit>{3}"),
      Pattern::parse("<alphanum>+.<alphanum>{2}"),
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Pattern& domain = domains[trial % domains.size()];
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::vector<std::string> column = sample_column(domain, size(rng), rng);
    auto keys = keys_of(hypothesis_space(column, h).patterns);
    EXPECT_EQ(keys, plixtest::oracle_hypothesis_keys(column)) << "trial " << trial;
  }
}

TEST(GenerateColumnPatterns, HomogeneousLettersColumn) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"a", "a", "a"};
  auto keys = keys_of(generate_column_patterns(column, 1.0, h).patterns);
  std::set<std::string> expected = {"a", "<letter>{1}", "<letter>+", "<alphanum>{1}",
                                    "<alphanum>+"};
  EXPECT_EQ(keys, expected);
}

TEST(GenerateColumnPatterns, MixedKindSingleTokens) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"1", "x"};
  auto keys = keys_of(generate_column_patterns(column, 1.0, h).patterns);
  std::set<std::string> expected = {"<alphanum>{1}", "<alphanum>+"};
  EXPECT_EQ(keys, expected);
}

TEST(GenerateColumnPatterns, EqualsHypothesisSpaceAtFullCoverage) {
  Hierarchy h = Hierarchy::standard();
  std::mt19937_64 rng(23);
  std::vector<Pattern> domains = {
      Pattern::parse("<digit>{2}:<digit>{2}"),
      Pattern::parse("<letter>+_<digit>+"),
      Pattern::parse("<alphanum>{3}"),
  };
  for (int trial = 0; trial < 15; ++trial) {
    const Pattern& domain = domains[trial % domains.size()];
    std::vector<std::string> column = sample_column(domain, 4, rng);
    auto generated = keys_of(generate_column_patterns(column, 1.0, h).patterns);
    auto hypothesis = keys_of(hypothesis_space(column, h).patterns);
    EXPECT_EQ(generated, hypothesis) << "trial " << trial;
  }
}

TEST(GenerateColumnPatterns, CoverageThresholdRetainsTheMajorityShape) {
  Hierarchy h = Hierarchy::standard();
  // Nine clock values and one straggler: at 0.9 the clock patterns survive,
  // the straggler's do not.
  std::vector<std::string> column;
  for (int i = 0; i < 9; ++i) column.push_back("9:0" + std::to_string(i));
  column.push_back("oops");
  auto keys = keys_of(generate_column_patterns(column, 0.9, h).patterns);
  EXPECT_TRUE(keys.contains("9:<digit>{2}"));
  EXPECT_TRUE(keys.contains("<digit>+:<digit>{2}"));
  EXPECT_FALSE(keys.contains("oops"));
  EXPECT_FALSE(keys.contains("<letter>+"));

  // Definitional cross-check: exactly the patterns matching >= 90% of values.
  std::set<std::string> expected;
  std::set<std::string> universe;
  for (const std::string& v : column) {
    for (const auto& key : plixtest::oracle_enumerate_keys(v)) universe.insert(key);
  }
  for (const std::string& key : universe) {
    std::size_t matched = 0;
    for (const std::string& v : column) {
      if (plixtest::oracle_enumerate_keys(v).contains(key)) ++matched;
    }
    if (matched >= 9 && key != "<any>" && key != "<any><any>" && key != "<any><any><any>") {
      expected.insert(key);
    }
  }
  EXPECT_EQ(keys, expected);
}

TEST(GenerateColumnPatterns, UntokenizableColumnYieldsNothing) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"", ""};
  EXPECT_TRUE(generate_column_patterns(column, 0.5, h).patterns.empty());
}

TEST(GenerateColumnPatterns, RejectsBadFraction) {
  Hierarchy h = Hierarchy::standard();
  std::vector<std::string> column = {"a"};
  EXPECT_THROW(generate_column_patterns(column, 0.0, h), std::invalid_argument);
  EXPECT_THROW(generate_column_patterns(column, 1.5, h), std::invalid_argument);
}

}  // namespace
}  // namespace plix
