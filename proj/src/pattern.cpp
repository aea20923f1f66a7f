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

#include <charconv>
#include <stdexcept>

namespace plix {

bool TokenClass::matches(const Token& token) const {
  switch (kind) {
    case ClassKind::kLiteral:
      return token.text == literal;
    case ClassKind::kDigitFixed:
      return token.kind == TokenKind::kDigits && !token.has_decimal &&
             token.text.size() == length;
    case ClassKind::kDigitPlus:
      return token.kind == TokenKind::kDigits && !token.has_decimal;
    case ClassKind::kNumber:
      return token.kind == TokenKind::kDigits;
    case ClassKind::kLetterFixed:
      return token.kind == TokenKind::kLetters && token.text.size() == length;
    case ClassKind::kLetterPlus:
      return token.kind == TokenKind::kLetters;
    case ClassKind::kAlnumFixed:
      return (token.kind == TokenKind::kLetters ||
              (token.kind == TokenKind::kDigits && !token.has_decimal)) &&
             token.text.size() == length;
    case ClassKind::kAlnumPlus:
      return token.kind == TokenKind::kLetters ||
             (token.kind == TokenKind::kDigits && !token.has_decimal);
    case ClassKind::kAny:
      return true;
  }
  return false;
}

void render_token_class(const TokenClass& cls, std::string& out) {
  switch (cls.kind) {
    case ClassKind::kLiteral:
      for (char c : cls.literal) {
        // '<', '\' and '{' always need escaping. '+' is only special right
        // after a class atom's '>', where it would read as a plus modifier.
        if (c == '<' || c == '\\' || c == '{' ||
            (c == '+' && !out.empty() && out.back() == '>')) {
          out.push_back('\\');
        }
        out.push_back(c);
      }
      return;
    case ClassKind::kDigitFixed:
      if (cls.length == 1) {
        out += "<digit>";
      } else {
        out += "<digit>{" + std::to_string(cls.length) + "}";
      }
      return;
    case ClassKind::kDigitPlus:
      out += "<digit>+";
      return;
    case ClassKind::kNumber:
      out += "<num>";
      return;
    case ClassKind::kLetterFixed:
      out += "<letter>{" + std::to_string(cls.length) + "}";
      return;
    case ClassKind::kLetterPlus:
      out += "<letter>+";
      return;
    case ClassKind::kAlnumFixed:
      out += "<alphanum>{" + std::to_string(cls.length) + "}";
      return;
    case ClassKind::kAlnumPlus:
      out += "<alphanum>+";
      return;
    case ClassKind::kAny:
      out += "<any>";
      return;
  }
}

Pattern::Pattern(std::vector<TokenClass> tokens) : tokens_(std::move(tokens)) {
  key_.reserve(tokens_.size() * 8);
  for (const TokenClass& cls : tokens_) render_token_class(cls, key_);
}

bool Pattern::matches(std::span<const Token> tokens) const {
  if (tokens.size() != tokens_.size()) return false;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!tokens_[i].matches(tokens[i])) return false;
  }
  return true;
}

bool Pattern::matches(std::string_view value, const TokenizerOptions& opts) const {
  auto tokens = try_tokenize(value, opts);
  if (!tokens) return false;
  return matches(*tokens);
}

bool Pattern::is_trivial() const {
  if (tokens_.empty()) return false;
  for (const TokenClass& cls : tokens_) {
    if (cls.kind != ClassKind::kAny) return false;
  }
  return true;
}

std::size_t Pattern::loose_token_count() const {
  std::size_t n = 0;
  for (const TokenClass& cls : tokens_) {
    switch (cls.kind) {
      case ClassKind::kDigitPlus:
      case ClassKind::kLetterPlus:
      case ClassKind::kAlnumPlus:
      case ClassKind::kAny:
        ++n;
        break;
      default:
        break;
    }
  }
  return n;
}

namespace {

[[noreturn]] void parse_fail(std::string_view key, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("pattern parse error at offset " + std::to_string(pos) +
                              " in \"" + std::string(key) + "\": " + what);
}

// Splits accumulated literal text into maximal single-kind runs.
void flush_literal(std::string& buf, std::vector<TokenClass>& out) {
  if (buf.empty()) return;
  auto tokens = try_tokenize(buf);
  for (const Token& t : *tokens) out.push_back(TokenClass::Literal(std::string(t.text)));
  buf.clear();
}

}  // namespace

Pattern Pattern::parse(std::string_view key) {
  std::vector<TokenClass> out;
  std::string literal;
  std::size_t i = 0;
  while (i < key.size()) {
    char c = key[i];
    if (c == '\\') {
      if (i + 1 >= key.size()) parse_fail(key, i, "dangling escape");
      literal.push_back(key[i + 1]);
      i += 2;
      continue;
    }
    if (c != '<') {
      literal.push_back(c);
      ++i;
      continue;
    }
    flush_literal(literal, out);
    std::size_t close = key.find('>', i + 1);
    if (close == std::string_view::npos) parse_fail(key, i, "unterminated class atom");
    std::string_view name = key.substr(i + 1, close - i - 1);
    i = close + 1;
    // Optional modifier: '+' or '{k}'.
    bool plus = false;
    std::uint64_t count = 0;
    bool has_count = false;
    if (i < key.size() && key[i] == '+') {
      plus = true;
      ++i;
    } else if (i < key.size() && key[i] == '{') {
      std::size_t end = key.find('}', i + 1);
      if (end == std::string_view::npos) parse_fail(key, i, "unterminated length");
      std::string_view digits = key.substr(i + 1, end - i - 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (ec != std::errc{} || p != digits.data() + digits.size() || count == 0 ||
          count > 0xffffffffull) {
        parse_fail(key, i, "bad length");
      }
      has_count = true;
      i = end + 1;
    }
    if (name == "digit") {
      if (plus) {
        out.push_back(TokenClass::Of(ClassKind::kDigitPlus));
      } else {
        out.push_back(TokenClass::Fixed(ClassKind::kDigitFixed,
                                        has_count ? static_cast<std::uint32_t>(count) : 1));
      }
    } else if (name == "letter") {
      if (plus) {
        out.push_back(TokenClass::Of(ClassKind::kLetterPlus));
      } else {
        out.push_back(TokenClass::Fixed(ClassKind::kLetterFixed,
                                        has_count ? static_cast<std::uint32_t>(count) : 1));
      }
    } else if (name == "alphanum") {
      if (plus) {
        out.push_back(TokenClass::Of(ClassKind::kAlnumPlus));
      } else {
        out.push_back(TokenClass::Fixed(ClassKind::kAlnumFixed,
                                        has_count ? static_cast<std::uint32_t>(count) : 1));
      }
    } else if (name == "num") {
      if (plus || has_count) parse_fail(key, i, "<num> takes no modifier");
      out.push_back(TokenClass::Of(ClassKind::kNumber));
    } else if (name == "any") {
      if (plus || has_count) parse_fail(key, i, "<any> takes no modifier");
      out.push_back(TokenClass::Of(ClassKind::kAny));
    } else {
      parse_fail(key, i, "unknown class <" + std::string(name) + ">");
    }
  }
  flush_literal(literal, out);
  if (out.empty()) parse_fail(key, 0, "empty pattern");
  return Pattern(std::move(out));
}

}  // namespace plix
