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
#include <string_view>
#include <vector>

#include "plix/tokenizer.hpp"

namespace plix {

// Generalization classes a token can take. A pattern token of a given class
// matches exactly one value token.
enum class ClassKind : std::uint8_t {
  kLiteral,      // the exact token text
  kDigitFixed,   // digit run of an exact length
  kDigitPlus,    // any digit run
  kNumber,       // digit run, optionally with one '.' when merging is on
  kLetterFixed,  // letter run of an exact length
  kLetterPlus,   // any letter run
  kAlnumFixed,   // letter or digit run of an exact length
  kAlnumPlus,    // any letter or digit run
  kAny,          // any single token
};

struct TokenClass {
  ClassKind kind = ClassKind::kAny;
  std::uint32_t length = 0;  // *Fixed classes only
  std::string literal;       // kLiteral only

  bool matches(const Token& token) const;
  bool operator==(const TokenClass& other) const = default;

  static TokenClass Literal(std::string text) {
    return {ClassKind::kLiteral, 0, std::move(text)};
  }
  static TokenClass Fixed(ClassKind kind, std::uint32_t length) {
    return {kind, length, {}};
  }
  static TokenClass Of(ClassKind kind) { return {kind, 0, {}}; }
};

// Appends the canonical rendering of `cls` to `out`. Literal text is escaped
// so the rendering parses back unambiguously.
void render_token_class(const TokenClass& cls, std::string& out);

// A fixed-length sequence of token classes. Matching is positional: the value
// must produce exactly one token per pattern token.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<TokenClass> tokens);

  const std::vector<TokenClass>& tokens() const { return tokens_; }
  const std::string& key() const { return key_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  bool matches(std::span<const Token> tokens) const;
  bool matches(std::string_view value, const TokenizerOptions& opts = {}) const;

  // True when every token is <any>; such a pattern accepts every value of the
  // same token count and is excluded from hypothesis spaces.
  bool is_trivial() const;

  // Number of plus-level or <any> tokens; lower means more specific.
  std::size_t loose_token_count() const;

  bool operator==(const Pattern& other) const { return key_ == other.key_; }
  bool operator<(const Pattern& other) const { return key_ < other.key_; }

  // Parses a canonical key back into a pattern. Throws std::invalid_argument
  // on malformed input. Literal runs are re-split into maximal single-kind
  // runs, so parse(render(p)) == p for every pattern derived from a value.
  static Pattern parse(std::string_view key);

 private:
  std::vector<TokenClass> tokens_;
  std::string key_;
};

}  // namespace plix
