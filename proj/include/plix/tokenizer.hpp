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
#include <string>
#include <string_view>
#include <vector>

namespace plix {

enum class TokenKind : std::uint8_t { kLetters, kDigits, kSymbols };

// One maximal run of a single character kind. `text` points into the source
// value; the caller keeps the value alive while tokens are in use.
struct Token {
  std::string_view text;
  TokenKind kind = TokenKind::kSymbols;
  // Set only when decimal merging is enabled and the run contains a '.'.
  bool has_decimal = false;
};

struct TokenizerOptions {
  // Merge digits '.' digits into one numeric token. Off by default; the
  // stock hierarchy treats '.' as a literal symbol.
  bool merge_decimal = false;
};

// Classifies a single byte. ASCII letters and digits map to their kinds,
// everything else (including non-ASCII bytes) is a symbol.
TokenKind classify_char(unsigned char c);

// Splits a value into maximal runs of letters, digits, or symbols.
// Returns nullopt for the empty string.
std::optional<std::vector<Token>> try_tokenize(std::string_view value,
                                               const TokenizerOptions& opts = {});

// Throwing variant for callers that treat an empty cell as an error.
std::vector<Token> tokenize(std::string_view value, const TokenizerOptions& opts = {});

// Number of tokens in `value`; 0 for the empty string.
std::size_t token_count(std::string_view value, const TokenizerOptions& opts = {});

}  // namespace plix
