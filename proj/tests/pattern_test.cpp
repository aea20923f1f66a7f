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
#include "plix/pattern.hpp"

#include <gtest/gtest.h>

#include <random>

#include "plix/hierarchy.hpp"
#include "plix/pattern_gen.hpp"
#include "plix/synth.hpp"

namespace plix {
namespace {

TEST(Pattern, RendersCanonicalKeys) {
  Pattern p({TokenClass::Of(ClassKind::kDigitPlus), TokenClass::Literal(":"),
             TokenClass::Fixed(ClassKind::kDigitFixed, 2)});
  EXPECT_EQ(p.key(), "<digit>+:<digit>{2}");

  Pattern q({TokenClass::Fixed(ClassKind::kDigitFixed, 1)});
  EXPECT_EQ(q.key(), "<digit>");

  Pattern r({TokenClass::Fixed(ClassKind::kLetterFixed, 1),
             TokenClass::Fixed(ClassKind::kAlnumFixed, 3)});
  EXPECT_EQ(r.key(), "<letter>{1}<alphanum>{3}");
}

TEST(Pattern, MatchesClockValues) {
  Pattern p = Pattern::parse("<digit>+:<digit>{2}");
  EXPECT_TRUE(p.matches("12:07"));
  EXPECT_TRUE(p.matches("9:07"));
  EXPECT_FALSE(p.matches("9:7"));
  EXPECT_FALSE(p.matches("9:07:11"));
  EXPECT_FALSE(p.matches(""));

  // A two-digit hour does not fit a single-<digit> slot.
  Pattern narrow = Pattern::parse("<digit>:<digit>{2}");
  EXPECT_FALSE(narrow.matches("10:02"));
  EXPECT_TRUE(narrow.matches("9:02"));
}

TEST(Pattern, MatchesDateValue) {
  Pattern p = Pattern::parse("<letter>{3} <digit>{2} <digit>{4}");
  EXPECT_TRUE(p.matches("Apr 01 2019"));
  EXPECT_TRUE(p.matches("Mar 30 2019"));
  EXPECT_FALSE(p.matches("April 01 2019"));
}

TEST(Pattern, ParseRejectsMalformedKeys) {
  EXPECT_THROW(Pattern::parse(""), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<digit"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<bogus>"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<digit>{0}"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<digit>{x}"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<num>+"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("<any>{2}"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("abc\\"), std::invalid_argument);
}

TEST(Pattern, ParseAcceptsAliases) {
  EXPECT_EQ(Pattern::parse("<digit>{1}").key(), "<digit>");
  EXPECT_EQ(Pattern::parse("<letter>").key(), "<letter>{1}");
  EXPECT_EQ(Pattern::parse("<alphanum>").key(), "<alphanum>{1}");
}

TEST(Pattern, EscapedLiteralsRoundTrip) {
  Pattern p({TokenClass::Literal("<"), TokenClass::Literal("a"), TokenClass::Literal("{}")});
  EXPECT_EQ(p.key(), "\\<a\\{}");
  EXPECT_EQ(Pattern::parse(p.key()), p);

  // A literal '+' directly after a class atom must not read as a modifier.
  Pattern q({TokenClass::Fixed(ClassKind::kDigitFixed, 1), TokenClass::Literal("+")});
  EXPECT_EQ(q.key(), "<digit>\\+");
  EXPECT_EQ(Pattern::parse(q.key()), q);
  Pattern plus = Pattern::parse("<digit>+");
  EXPECT_EQ(plus.tokens().size(), 1u);
}

TEST(Pattern, TrivialAndLooseness) {
  EXPECT_TRUE(Pattern::parse("<any><any>").is_trivial());
  EXPECT_FALSE(Pattern::parse("<any>:<any>").is_trivial());
  EXPECT_EQ(Pattern::parse("<digit>+:<any>").loose_token_count(), 2u);
  EXPECT_EQ(Pattern::parse("<num>:<digit>{2}").loose_token_count(), 0u);
}

TEST(Pattern, RoundTripsOverEnumeratedPatterns) {
  // parse(render(p)) == p for everything enumerable from a value.
  Hierarchy hierarchy = Hierarchy::standard();
  for (const char* value : {"9:07", "a+b", "x<1\\{", "PM ", "-"}) {
    auto result = enumerate_value_patterns(value, hierarchy);
    ASSERT_FALSE(result.truncated);
    for (const Pattern& p : result.patterns) {
      EXPECT_EQ(Pattern::parse(p.key()), p) << p.key();
    }
  }
}

TEST(Pattern, RoundTripsOverRandomDomains) {
  std::mt19937_64 rng(11);
  Hierarchy hierarchy = Hierarchy::standard();
  std::vector<Pattern> domains = {
      Pattern::parse("<digit>{3}-<letter>{2}"),
      Pattern::parse("<letter>+_<num>"),
      Pattern::parse("<alphanum>{4}.<alphanum>+"),
  };
  for (const Pattern& domain : domains) {
    for (int i = 0; i < 20; ++i) {
      std::string value = sample_value(domain, rng);
      auto result = enumerate_value_patterns(value, hierarchy);
      for (const Pattern& p : result.patterns) {
        ASSERT_EQ(Pattern::parse(p.key()), p) << p.key();
        ASSERT_TRUE(p.matches(value)) << p.key() << " vs " << value;
      }
    }
  }
}

}  // namespace
}  // namespace plix
