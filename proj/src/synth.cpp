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
#include "plix/synth.hpp"

#include <stdexcept>

namespace plix {

namespace {

constexpr std::uint32_t kMaxRunLength = 5;
constexpr const char kSymbolPool[] = "-_./:#";

std::string sample_run(char lo, char hi, std::uint32_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::string out;
  out.reserve(length);
  for (std::uint32_t i = 0; i < length; ++i) out.push_back(static_cast<char>(dist(rng)));
  return out;
}

std::string sample_token(const TokenClass& cls, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> run_len(1, kMaxRunLength);
  std::uniform_int_distribution<int> coin(0, 1);
  switch (cls.kind) {
    case ClassKind::kLiteral:
      return cls.literal;
    case ClassKind::kDigitFixed:
      return sample_run('0', '9', cls.length, rng);
    case ClassKind::kDigitPlus:
    case ClassKind::kNumber:
      return sample_run('0', '9', run_len(rng), rng);
    case ClassKind::kLetterFixed:
      return sample_run('a', 'z', cls.length, rng);
    case ClassKind::kLetterPlus:
      return sample_run('a', 'z', run_len(rng), rng);
    case ClassKind::kAlnumFixed:
      return coin(rng) ? sample_run('a', 'z', cls.length, rng)
                       : sample_run('0', '9', cls.length, rng);
    case ClassKind::kAlnumPlus:
      return coin(rng) ? sample_run('a', 'z', run_len(rng), rng)
                       : sample_run('0', '9', run_len(rng), rng);
    case ClassKind::kAny: {
      std::uniform_int_distribution<int> pick(0, 2);
      switch (pick(rng)) {
        case 0: return sample_run('a', 'z', run_len(rng), rng);
        case 1: return sample_run('0', '9', run_len(rng), rng);
        default: {
          std::uniform_int_distribution<std::size_t> s(0, sizeof(kSymbolPool) - 2);
          return std::string(1, kSymbolPool[s(rng)]);
        }
      }
    }
  }
  return {};
}

}  // namespace

std::string sample_value(const Pattern& domain, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::string value;
    for (const TokenClass& cls : domain.tokens()) value += sample_token(cls, rng);
    // Adjacent same-kind runs merge under tokenization, so verify the draw.
    if (domain.matches(value)) return value;
  }
  throw std::runtime_error("sample_value: domain pattern " + domain.key() +
                           " keeps producing merging runs");
}

std::vector<std::string> sample_column(const Pattern& domain, std::size_t values,
                                       std::mt19937_64& rng) {
  std::vector<std::string> out;
  out.reserve(values);
  for (std::size_t i = 0; i < values; ++i) out.push_back(sample_value(domain, rng));
  return out;
}

std::vector<ColumnData> sample_corpus(const Pattern& domain, std::size_t columns,
                                      std::size_t values, std::uint64_t seed,
                                      const std::string& id_prefix) {
  std::mt19937_64 rng(seed);
  std::vector<ColumnData> out;
  out.reserve(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    out.push_back({id_prefix + "/" + std::to_string(c), sample_column(domain, values, rng)});
  }
  return out;
}

}  // namespace plix
