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
#include "plix/hierarchy.hpp"
#include "plix/errors.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace plix {

namespace {

constexpr std::size_t kKindCount = 9;

constexpr const char* kKindNames[kKindCount] = {
    "literal",      "digit_fixed", "digit_plus",  "number",     "letter_fixed",
    "letter_plus",  "alnum_fixed", "alnum_plus",  "any",
};

std::size_t kind_index(ClassKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

std::string class_kind_name(ClassKind kind) { return kKindNames[kind_index(kind)]; }

ClassKind class_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindCount; ++i) {
    if (name == kKindNames[i]) return static_cast<ClassKind>(i);
  }
  throw std::invalid_argument("unknown token class: " + std::string(name));
}

Hierarchy::Hierarchy(std::vector<ClassKind> nodes,
                     std::vector<std::pair<ClassKind, ClassKind>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (ClassKind k : nodes_) present_[kind_index(k)] = true;
  validate();
  for (const auto& [child, parent] : edges_) {
    children_[kind_index(parent)].push_back(child);
  }
  compute_ranks();
  compute_fingerprint();
}

void Hierarchy::validate() const {
  if (!present_[kind_index(ClassKind::kAny)]) {
    throw std::invalid_argument("hierarchy must contain the <any> class");
  }
  for (const auto& [child, parent] : edges_) {
    if (!present_[kind_index(child)] || !present_[kind_index(parent)]) {
      throw std::invalid_argument("hierarchy edge references a missing node");
    }
  }
  // Cycle check plus reachability of <any> from every node.
  for (ClassKind start : nodes_) {
    std::vector<ClassKind> stack{start};
    std::array<bool, kKindCount> seen{};
    bool reaches_top = start == ClassKind::kAny;
    std::size_t steps = 0;
    while (!stack.empty()) {
      ClassKind cur = stack.back();
      stack.pop_back();
      if (++steps > kKindCount * kKindCount) {
        throw std::invalid_argument("hierarchy contains a cycle");
      }
      for (const auto& [child, parent] : edges_) {
        if (child != cur) continue;
        if (parent == start) throw std::invalid_argument("hierarchy contains a cycle");
        if (parent == ClassKind::kAny) reaches_top = true;
        if (!seen[kind_index(parent)]) {
          seen[kind_index(parent)] = true;
          stack.push_back(parent);
        }
      }
    }
    if (!reaches_top) {
      throw std::invalid_argument("class " + class_kind_name(start) +
                                  " cannot generalize to <any>");
    }
  }
}

void Hierarchy::compute_ranks() {
  // Longest path from any source node, walked in topological fashion.
  // The graph is tiny, so fixed-point iteration is fine.
  for (std::size_t i = 0; i < kKindCount; ++i) ranks_[i] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [child, parent] : edges_) {
      int want = ranks_[kind_index(child)] + 1;
      if (ranks_[kind_index(parent)] < want) {
        ranks_[kind_index(parent)] = want;
        changed = true;
      }
    }
  }
}

void Hierarchy::compute_fingerprint() {
  std::string canon = "plix-hierarchy/v1\nnodes\n";
  for (ClassKind k : nodes_) canon += class_kind_name(k) + "\n";
  canon += "edges\n";
  for (const auto& [child, parent] : edges_) {
    canon += class_kind_name(child) + ">" + class_kind_name(parent) + "\n";
  }
  SHA256(reinterpret_cast<const unsigned char*>(canon.data()), canon.size(),
         fingerprint_.data());
}

Hierarchy Hierarchy::standard() {
  using K = ClassKind;
  std::vector<ClassKind> nodes = {K::kLiteral,     K::kDigitFixed, K::kDigitPlus,
                                  K::kNumber,      K::kLetterFixed, K::kLetterPlus,
                                  K::kAlnumFixed,  K::kAlnumPlus,   K::kAny};
  std::vector<std::pair<ClassKind, ClassKind>> edges = {
      {K::kLiteral, K::kDigitFixed},  {K::kLiteral, K::kLetterFixed},
      {K::kLiteral, K::kAny},         {K::kDigitFixed, K::kDigitPlus},
      {K::kDigitFixed, K::kAlnumFixed}, {K::kDigitPlus, K::kNumber},
      {K::kNumber, K::kAlnumPlus},    {K::kLetterFixed, K::kLetterPlus},
      {K::kLetterFixed, K::kAlnumFixed}, {K::kLetterPlus, K::kAlnumPlus},
      {K::kAlnumFixed, K::kAlnumPlus}, {K::kAlnumPlus, K::kAny},
  };
  return Hierarchy(std::move(nodes), std::move(edges));
}

Hierarchy Hierarchy::from_json_text(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<ClassKind> nodes;
  for (const auto& n : doc.at("nodes")) {
    nodes.push_back(class_kind_from_name(n.get<std::string>()));
  }
  std::vector<std::pair<ClassKind, ClassKind>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("hierarchy edge must be a [child, parent] pair");
    }
    edges.emplace_back(class_kind_from_name(e[0].get<std::string>()),
                       class_kind_from_name(e[1].get<std::string>()));
  }
  return Hierarchy(std::move(nodes), std::move(edges));
}

Hierarchy Hierarchy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open hierarchy file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string Hierarchy::to_json_text() const {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (ClassKind k : nodes_) doc["nodes"].push_back(class_kind_name(k));
  doc["edges"] = nlohmann::json::array();
  for (const auto& [child, parent] : edges_) {
    doc["edges"].push_back({class_kind_name(child), class_kind_name(parent)});
  }
  return doc.dump(2);
}

bool Hierarchy::contains(ClassKind kind) const { return present_[kind_index(kind)]; }

int Hierarchy::generality_rank(ClassKind kind) const { return ranks_[kind_index(kind)]; }

const std::vector<ClassKind>& Hierarchy::children(ClassKind kind) const {
  return children_[kind_index(kind)];
}

std::vector<TokenClass> Hierarchy::generalizations(const Token& token) const {
  std::vector<TokenClass> out;
  for (ClassKind kind : nodes_) {
    TokenClass candidate;
    switch (kind) {
      case ClassKind::kLiteral:
        candidate = TokenClass::Literal(std::string(token.text));
        break;
      case ClassKind::kDigitFixed:
      case ClassKind::kLetterFixed:
      case ClassKind::kAlnumFixed:
        candidate = TokenClass::Fixed(kind, static_cast<std::uint32_t>(token.text.size()));
        break;
      default:
        candidate = TokenClass::Of(kind);
        break;
    }
    if (candidate.matches(token)) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), [this](const TokenClass& a, const TokenClass& b) {
    int ra = generality_rank(a.kind);
    int rb = generality_rank(b.kind);
    if (ra != rb) return ra < rb;
    std::string ka, kb;
    render_token_class(a, ka);
    render_token_class(b, kb);
    return ka < kb;
  });
  return out;
}

TokenClass Hierarchy::coarse_class(const Token& token) const {
  if (token.kind == TokenKind::kSymbols) {
    return TokenClass::Literal(std::string(token.text));
  }
  // Most general class that stays within the token's own kind.
  static constexpr ClassKind kDigitChain[] = {ClassKind::kNumber, ClassKind::kDigitPlus,
                                              ClassKind::kDigitFixed};
  static constexpr ClassKind kLetterChain[] = {ClassKind::kLetterPlus,
                                               ClassKind::kLetterFixed};
  if (token.kind == TokenKind::kDigits) {
    for (ClassKind k : kDigitChain) {
      if (!contains(k)) continue;
      TokenClass c = k == ClassKind::kDigitFixed
                         ? TokenClass::Fixed(k, static_cast<std::uint32_t>(token.text.size()))
                         : TokenClass::Of(k);
      if (c.matches(token)) return c;
    }
  } else {
    for (ClassKind k : kLetterChain) {
      if (!contains(k)) continue;
      TokenClass c = k == ClassKind::kLetterFixed
                         ? TokenClass::Fixed(k, static_cast<std::uint32_t>(token.text.size()))
                         : TokenClass::Of(k);
      if (c.matches(token)) return c;
    }
  }
  return TokenClass::Literal(std::string(token.text));
}

Pattern Hierarchy::coarse_shape(std::span<const Token> tokens) const {
  std::vector<TokenClass> classes;
  classes.reserve(tokens.size());
  for (const Token& t : tokens) classes.push_back(coarse_class(t));
  return Pattern(std::move(classes));
}

std::string Hierarchy::fingerprint_hex() const {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : fingerprint_) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

}  // namespace plix
