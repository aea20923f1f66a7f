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

#include <stdexcept>

namespace plix {

TokenKind classify_char(unsigned char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return TokenKind::kLetters;
  if (c >= '0' && c <= '9') return TokenKind::kDigits;
  return TokenKind::kSymbols;
}

std::optional<std::vector<Token>> try_tokenize(std::string_view value,
                                               const TokenizerOptions& opts) {
  if (value.empty()) return std::nullopt;
  std::vector<Token> out;
  std::size_t start = 0;
  TokenKind kind = classify_char(static_cast<unsigned char>(value[0]));
  for (std::size_t i = 1; i <= value.size(); ++i) {
    TokenKind k = i < value.size()
                      ? classify_char(static_cast<unsigned char>(value[i]))
                      : TokenKind::kSymbols;
    if (i == value.size() || k != kind) {
      out.push_back(Token{value.substr(start, i - start), kind, false});
      start = i;
      kind = k;
    }
  }
  if (opts.merge_decimal && out.size() >= 3) {
    // Collapse digits '.' digits triples into a single numeric token.
    std::vector<Token> merged;
    merged.reserve(out.size());
    std::size_t i = 0;
    while (i < out.size()) {
      if (i + 2 < out.size() && out[i].kind == TokenKind::kDigits &&
          !out[i].has_decimal && out[i + 1].text == "." &&
          out[i + 2].kind == TokenKind::kDigits) {
        std::size_t off = static_cast<std::size_t>(out[i].text.data() - value.data());
        std::size_t len = out[i].text.size() + 1 + out[i + 2].text.size();
        merged.push_back(Token{value.substr(off, len), TokenKind::kDigits, true});
        i += 3;
      } else {
        merged.push_back(out[i]);
        ++i;
      }
    }
    out = std::move(merged);
  }
  return out;
}

std::vector<Token> tokenize(std::string_view value, const TokenizerOptions& opts) {
  auto tokens = try_tokenize(value, opts);
  if (!tokens) throw std::invalid_argument("tokenize: empty value");
  return std::move(*tokens);
}

std::size_t token_count(std::string_view value, const TokenizerOptions& opts) {
  auto tokens = try_tokenize(value, opts);
  return tokens ? tokens->size() : 0;
}

}  // namespace plix
