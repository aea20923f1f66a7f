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

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace plix {

namespace {

struct GenLists {
  // Per token: generalizations sorted by (rank, atom), with their ranks.
  std::vector<std::vector<TokenClass>> classes;
  std::vector<std::vector<int>> ranks;
};

GenLists build_gen_lists(std::span<const Token> tokens, const Hierarchy& hierarchy) {
  GenLists lists;
  lists.classes.reserve(tokens.size());
  lists.ranks.reserve(tokens.size());
  for (const Token& t : tokens) {
    auto gens = hierarchy.generalizations(t);
    std::vector<int> ranks;
    ranks.reserve(gens.size());
    for (const TokenClass& c : gens) ranks.push_back(hierarchy.generality_rank(c.kind));
    lists.classes.push_back(std::move(gens));
    lists.ranks.push_back(std::move(ranks));
  }
  return lists;
}

std::uint64_t saturating_product(const GenLists& lists) {
  std::uint64_t product = 1;
  for (const auto& l : lists.classes) {
    if (l.empty()) return 0;
    if (product > std::numeric_limits<std::uint64_t>::max() / l.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    product *= l.size();
  }
  return product;
}

// Emits every cross-product combination; only used when the product fits cap.
void emit_full_product(const GenLists& lists, std::vector<Pattern>& out) {
  const std::size_t n = lists.classes.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<TokenClass> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = lists.classes[i][0];
  while (true) {
    out.emplace_back(current);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < lists.classes[pos].size()) {
        current[pos] = lists.classes[pos][idx[pos]];
        break;
      }
      idx[pos] = 0;
      current[pos] = lists.classes[pos][0];
      if (pos == 0) return;
    }
    if (pos == 0 && idx[0] == 0) return;
  }
}

// Enumerates combinations in increasing total-rank order (shallowest first)
// by iterative deepening on the exact rank sum, stopping at `cap`.
struct LayeredEnumerator {
  const GenLists& lists;
  std::uint64_t cap;
  std::vector<int> min_suffix;
  std::vector<int> max_suffix;
  std::vector<TokenClass> current;
  std::vector<Pattern>& out;

  LayeredEnumerator(const GenLists& l, std::uint64_t c, std::vector<Pattern>& o)
      : lists(l), cap(c), out(o) {
    const std::size_t n = lists.classes.size();
    min_suffix.assign(n + 1, 0);
    max_suffix.assign(n + 1, 0);
    for (std::size_t i = n; i > 0; --i) {
      min_suffix[i - 1] = min_suffix[i] + lists.ranks[i - 1].front();
      max_suffix[i - 1] = max_suffix[i] + lists.ranks[i - 1].back();
    }
    current.resize(n);
  }

  bool dfs(std::size_t pos, int remaining) {
    if (out.size() >= cap) return false;
    if (pos == lists.classes.size()) {
      out.emplace_back(current);
      return out.size() < cap;
    }
    const auto& classes = lists.classes[pos];
    const auto& ranks = lists.ranks[pos];
    for (std::size_t j = 0; j < classes.size(); ++j) {
      int rest = remaining - ranks[j];
      if (rest < min_suffix[pos + 1]) break;  // ranks ascend; nothing further fits
      if (rest > max_suffix[pos + 1]) continue;
      current[pos] = classes[j];
      if (!dfs(pos + 1, rest)) return false;
    }
    return true;
  }

  void run() {
    for (int target = min_suffix[0]; target <= max_suffix[0]; ++target) {
      if (!dfs(0, target)) return;
    }
  }
};

}  // namespace

EnumerationResult enumerate_value_patterns(std::string_view value, const Hierarchy& hierarchy,
                                           std::uint64_t cap, const TokenizerOptions& opts) {
  auto tokens = try_tokenize(value, opts);
  if (!tokens) throw std::invalid_argument("enumerate_value_patterns: empty value");
  if (cap == 0) throw std::invalid_argument("enumerate_value_patterns: cap must be positive");

  GenLists lists = build_gen_lists(*tokens, hierarchy);
  EnumerationResult result;
  std::uint64_t product = saturating_product(lists);
  if (product <= cap) {
    result.patterns.reserve(product);
    emit_full_product(lists, result.patterns);
    return result;
  }
  result.patterns.reserve(cap);
  LayeredEnumerator(lists, cap, result.patterns).run();
  result.truncated = true;
  return result;
}

EnumerationResult hypothesis_space(std::span<const std::string> column,
                                   const Hierarchy& hierarchy, std::uint64_t cap,
                                   const TokenizerOptions& opts) {
  EnumerationResult empty;
  if (column.empty()) return empty;

  std::vector<const std::string*> distinct;
  {
    std::unordered_set<std::string_view> seen;
    for (const std::string& v : column) {
      if (seen.insert(v).second) distinct.push_back(&v);
    }
  }
  std::vector<std::vector<Token>> token_lists;
  token_lists.reserve(distinct.size());
  for (const std::string* v : distinct) {
    auto tokens = try_tokenize(*v, opts);
    if (!tokens) return empty;  // untokenizable value: nothing matches everything
    if (!token_lists.empty() && tokens->size() != token_lists.front().size()) {
      return empty;  // mixed shapes share no pattern
    }
    token_lists.push_back(std::move(*tokens));
  }

  // Enumerate the value with the smallest pattern space and filter the rest.
  std::size_t best = 0;
  std::uint64_t best_size = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    GenLists lists = build_gen_lists(token_lists[i], hierarchy);
    std::uint64_t size = saturating_product(lists);
    if (size < best_size || (size == best_size && *distinct[i] < *distinct[best])) {
      best_size = size;
      best = i;
    }
  }

  EnumerationResult enumerated =
      enumerate_value_patterns(*distinct[best], hierarchy, cap, opts);
  EnumerationResult result;
  result.truncated = enumerated.truncated;
  result.patterns.reserve(enumerated.patterns.size());
  for (Pattern& p : enumerated.patterns) {
    if (p.is_trivial()) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < token_lists.size() && consistent; ++i) {
      if (i == best) continue;
      consistent = p.matches(token_lists[i]);
    }
    if (consistent) result.patterns.push_back(std::move(p));
  }
  return result;
}

namespace {

struct DistinctValue {
  std::uint64_t mult = 0;
  std::vector<Token> tokens;  // empty for untokenizable values
  bool tokenizable = false;
};

struct PositionStats {
  // Multiplicity-weighted sums over the group's tokens at one position.
  std::map<std::string_view, std::uint64_t> text_mult;
  std::map<std::uint32_t, std::uint64_t> digit_len_mult;
  std::map<std::uint32_t, std::uint64_t> letter_len_mult;
  std::uint64_t digit_mult = 0;       // plain digit runs
  std::uint64_t any_digit_mult = 0;   // including merged decimals
  std::uint64_t letter_mult = 0;
};

struct SearchNode {
  std::vector<TokenClass> classes;
  std::vector<std::uint32_t> matched;  // indices into the distinct table
};

}  // namespace

EnumerationResult generate_column_patterns(std::span<const std::string> column,
                                           double coverage_fraction,
                                           const Hierarchy& hierarchy, std::uint64_t cap,
                                           const TokenizerOptions& opts) {
  if (coverage_fraction <= 0.0 || coverage_fraction > 1.0) {
    throw std::invalid_argument("coverage_fraction must be in (0, 1]");
  }
  EnumerationResult result;
  if (column.empty()) return result;

  std::vector<std::string> distinct_values;
  std::vector<DistinctValue> distinct;
  {
    std::unordered_map<std::string_view, std::size_t> pos;
    for (const std::string& v : column) {
      auto it = pos.find(v);
      if (it == pos.end()) {
        pos.emplace(v, distinct_values.size());
        distinct_values.push_back(v);
        distinct.push_back({1, {}, false});
      } else {
        ++distinct[it->second].mult;
      }
    }
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    auto tokens = try_tokenize(distinct_values[i], opts);
    if (tokens) {
      distinct[i].tokens = std::move(*tokens);
      distinct[i].tokenizable = true;
    }
  }

  const double threshold = coverage_fraction * static_cast<double>(column.size()) - 1e-9;
  auto covered = [&](const std::vector<std::uint32_t>& matched) {
    std::uint64_t total = 0;
    for (std::uint32_t i : matched) total += distinct[i].mult;
    return total;
  };
  auto meets = [&](std::uint64_t count) { return static_cast<double>(count) >= threshold; };

  std::map<std::size_t, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (distinct[i].tokenizable) {
      groups[distinct[i].tokens.size()].push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::unordered_set<std::string> visited;
  bool truncated = false;
  for (const auto& [width, members] : groups) {
    if (!meets(covered(members))) continue;

    std::vector<PositionStats> stats(width);
    for (std::uint32_t idx : members) {
      const DistinctValue& dv = distinct[idx];
      for (std::size_t p = 0; p < width; ++p) {
        const Token& t = dv.tokens[p];
        PositionStats& s = stats[p];
        s.text_mult[t.text] += dv.mult;
        if (t.kind == TokenKind::kDigits) {
          s.any_digit_mult += dv.mult;
          if (!t.has_decimal) {
            s.digit_mult += dv.mult;
            s.digit_len_mult[static_cast<std::uint32_t>(t.text.size())] += dv.mult;
          }
        } else if (t.kind == TokenKind::kLetters) {
          s.letter_mult += dv.mult;
          s.letter_len_mult[static_cast<std::uint32_t>(t.text.size())] += dv.mult;
        }
      }
    }

    // Candidate instantiations of `kind` at position `p` whose per-position
    // match weight alone can still reach the threshold.
    auto candidates = [&](ClassKind kind, std::size_t p) {
      std::vector<TokenClass> out;
      const PositionStats& s = stats[p];
      switch (kind) {
        case ClassKind::kLiteral:
          for (const auto& [text, mult] : s.text_mult) {
            if (meets(mult)) out.push_back(TokenClass::Literal(std::string(text)));
          }
          break;
        case ClassKind::kDigitFixed:
          for (const auto& [len, mult] : s.digit_len_mult) {
            if (meets(mult)) out.push_back(TokenClass::Fixed(kind, len));
          }
          break;
        case ClassKind::kLetterFixed:
          for (const auto& [len, mult] : s.letter_len_mult) {
            if (meets(mult)) out.push_back(TokenClass::Fixed(kind, len));
          }
          break;
        case ClassKind::kAlnumFixed: {
          std::map<std::uint32_t, std::uint64_t> merged = s.digit_len_mult;
          for (const auto& [len, mult] : s.letter_len_mult) merged[len] += mult;
          for (const auto& [len, mult] : merged) {
            if (meets(mult)) out.push_back(TokenClass::Fixed(kind, len));
          }
          break;
        }
        case ClassKind::kDigitPlus:
          if (meets(s.digit_mult)) out.push_back(TokenClass::Of(kind));
          break;
        case ClassKind::kNumber:
          if (meets(s.any_digit_mult)) out.push_back(TokenClass::Of(kind));
          break;
        case ClassKind::kLetterPlus:
          if (meets(s.letter_mult)) out.push_back(TokenClass::Of(kind));
          break;
        case ClassKind::kAlnumPlus:
          if (meets(s.digit_mult + s.letter_mult)) out.push_back(TokenClass::Of(kind));
          break;
        case ClassKind::kAny:
          break;  // never a child
      }
      return out;
    };

    SearchNode top;
    top.classes.assign(width, TokenClass::Of(ClassKind::kAny));
    top.matched = members;
    Pattern top_pattern(top.classes);
    if (!visited.insert(top_pattern.key()).second) continue;

    std::deque<SearchNode> queue;
    queue.push_back(std::move(top));
    while (!queue.empty()) {
      if (result.patterns.size() >= cap) {
        truncated = true;
        break;
      }
      SearchNode node = std::move(queue.front());
      queue.pop_front();
      Pattern pattern(node.classes);
      if (!pattern.is_trivial()) result.patterns.push_back(pattern);

      for (std::size_t p = 0; p < width; ++p) {
        for (ClassKind child_kind : hierarchy.children(node.classes[p].kind)) {
          for (TokenClass& candidate : candidates(child_kind, p)) {
            SearchNode child;
            child.classes = node.classes;
            child.classes[p] = std::move(candidate);
            std::string key;
            key.reserve(pattern.key().size() + 8);
            for (const TokenClass& cls : child.classes) render_token_class(cls, key);
            if (visited.contains(key)) continue;
            child.matched.reserve(node.matched.size());
            for (std::uint32_t idx : node.matched) {
              if (child.classes[p].matches(distinct[idx].tokens[p])) {
                child.matched.push_back(idx);
              }
            }
            visited.insert(std::move(key));
            if (meets(covered(child.matched))) queue.push_back(std::move(child));
          }
        }
      }
    }
    if (truncated) break;
  }
  result.truncated = truncated;
  return result;
}

}  // namespace plix
