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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plix/pattern.hpp"

namespace plix {

struct IndexParams {
  std::uint32_t tau = 8;                            // max token count for enumeration
  std::uint64_t cap = 100000;                       // per-value enumeration cap
  std::array<std::uint8_t, 32> hierarchy_fingerprint{};
};

struct IndexEntry {
  double fpr = 0.0;
  std::uint64_t cov = 0;
};

// Precomputed per-pattern statistics over a corpus: expected false-positive
// rate and the number of columns the pattern was observed in. Immutable after
// construction; lookups are safe from multiple threads.
class CorpusIndex {
 public:
  CorpusIndex() = default;
  CorpusIndex(IndexParams params, std::unordered_map<std::string, IndexEntry> table)
      : params_(params), table_(std::move(table)) {}

  const IndexParams& params() const { return params_; }
  std::size_t size() const { return table_.size(); }

  std::optional<IndexEntry> lookup(const std::string& key) const;
  std::optional<IndexEntry> lookup(const Pattern& pattern) const {
    return lookup(pattern.key());
  }

  const std::unordered_map<std::string, IndexEntry>& table() const { return table_; }

  // Binary format: "PLIX" magic, u16 version, params (u32 tau, u64 cap,
  // 32-byte hierarchy fingerprint), u64 entry count, then records sorted by
  // key (u32 length-prefixed key, IEEE-754 fpr, u64 cov), and a trailing
  // CRC-32 of everything before it. Little-endian throughout.
  void save(const std::filesystem::path& path) const;
  static CorpusIndex load(const std::filesystem::path& path);

 private:
  IndexParams params_;
  std::unordered_map<std::string, IndexEntry> table_;
};

}  // namespace plix
