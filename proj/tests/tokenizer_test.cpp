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
#include "plix/tokenizer.hpp"

#include <gtest/gtest.h>

#include <random>

namespace plix {
namespace {

TEST(Tokenizer, SplitsClockValueIntoThreeRuns) {
  auto tokens = tokenize("9:07");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].text, "9");
  EXPECT_EQ(tokens[0].kind, TokenKind::kDigits);
  EXPECT_EQ(tokens[1].text, ":");
  EXPECT_EQ(tokens[1].kind, TokenKind::kSymbols);
  EXPECT_EQ(tokens[2].text, "07");
  EXPECT_EQ(tokens[2].kind, TokenKind::kDigits);
}

TEST(Tokenizer, SingleRunValue) {
  auto tokens = tokenize("A");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kLetters);
}

TEST(Tokenizer, TimestampHasThirteenTokens) {
  // Whitespace is a symbol run like any other.
  EXPECT_EQ(token_count("9/12/2019 12:01:32 PM"), 13u);
}

TEST(Tokenizer, EmptyValueIsAnError) {
  EXPECT_FALSE(try_tokenize("").has_value());
  EXPECT_THROW(tokenize(""), std::invalid_argument);
}

TEST(Tokenizer, NonAsciiBytesAreSymbols) {
  auto tokens = tokenize("a\xc3\xa9" "b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kLetters);
  EXPECT_EQ(tokens[1].kind, TokenKind::kSymbols);
  EXPECT_EQ(tokens[2].kind, TokenKind::kLetters);
}

TEST(Tokenizer, ConcatenationReproducesValue) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abXY01 .:/-\xc2\xb5";
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 24);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string value;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) value.push_back(alphabet[pick(rng)]);

    auto tokens = tokenize(value);
    std::string rebuilt;
    TokenKind last = TokenKind::kSymbols;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      rebuilt += tokens[i].text;
      if (i > 0) EXPECT_NE(tokens[i].kind, last) << "runs must be maximal: " << value;
      last = tokens[i].kind;
    }
    EXPECT_EQ(rebuilt, value);
  }
}

TEST(Tokenizer, DecimalMergingIsOptIn) {
  auto plain = tokenize("12.5");
  ASSERT_EQ(plain.size(), 3u);

  TokenizerOptions opts;
  opts.merge_decimal = true;
  auto merged = tokenize("12.5", opts);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].text, "12.5");
  EXPECT_EQ(merged[0].kind, TokenKind::kDigits);
  EXPECT_TRUE(merged[0].has_decimal);

  // A second dot is not part of a numeric run.
  auto twice = tokenize("1.2.3", opts);
  ASSERT_EQ(twice.size(), 3u);
  EXPECT_EQ(twice[0].text, "1.2");
}

}  // namespace
}  // namespace plix
