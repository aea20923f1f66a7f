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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "plix/pattern.hpp"
#include "plix/tokenizer.hpp"

namespace plix {

// The DAG of token classes with child -> parent generalization edges.
// <any> is the unique top element; overlapping parents are allowed
// (e.g. a fixed-length digit run generalizes to both the digit chain and the
// alphanumeric chain).
class Hierarchy {
 public:
  // The stock hierarchy:
  //   literal -> digit{k} -> digit+ -> num -> alphanum+ -> any
  //   literal -> letter{k} -> letter+ -> alphanum+
  //   digit{k} / letter{k} -> alphanum{k} -> alphanum+
  //   literal (symbols) -> any
  static Hierarchy standard();

  // Loads a hierarchy from a JSON config file with "nodes" and "edges".
  static Hierarchy load(const std::filesystem::path& path);
  static Hierarchy from_json_text(std::string_view text);
  std::string to_json_text() const;

  bool contains(ClassKind kind) const;
  const std::vector<std::pair<ClassKind, ClassKind>>& edges() const { return edges_; }

  // Longest path from a minimal node; 0 for literals, highest for <any>.
  int generality_rank(ClassKind kind) const;

  // Direct specializations (reversed edges) of `kind`.
  const std::vector<ClassKind>& children(ClassKind kind) const;

  // Every class in the hierarchy whose match set contains `token`,
  // instantiated against it (literal text, run length). Sorted by
  // (generality rank, canonical atom) so enumeration order is stable.
  std::vector<TokenClass> generalizations(const Token& token) const;

  // The coarse class a token reduces to before drill-down: the most general
  // single-kind class for letter and digit runs, the literal for symbols.
  TokenClass coarse_class(const Token& token) const;
  Pattern coarse_shape(std::span<const Token> tokens) const;

  // SHA-256 over the canonical serialization; persisted in index files so a
  // mismatched hierarchy is detected at lookup time.
  const std::array<std::uint8_t, 32>& fingerprint() const { return fingerprint_; }
  std::string fingerprint_hex() const;

 private:
  Hierarchy(std::vector<ClassKind> nodes, std::vector<std::pair<ClassKind, ClassKind>> edges);
  void validate() const;
  void compute_ranks();
  void compute_fingerprint();

  std::vector<ClassKind> nodes_;
  std::vector<std::pair<ClassKind, ClassKind>> edges_;
  std::array<int, 9> ranks_{};
  std::array<bool, 9> present_{};
  std::array<std::vector<ClassKind>, 9> children_;
  std::array<std::uint8_t, 32> fingerprint_{};
};

std::string class_kind_name(ClassKind kind);
ClassKind class_kind_from_name(std::string_view name);

}  // namespace plix
