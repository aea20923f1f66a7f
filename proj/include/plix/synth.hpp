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
#include <random>
#include <string>
#include <vector>

#include "plix/corpus_io.hpp"
#include "plix/pattern.hpp"

namespace plix {

// Draws a random value matching `domain`. Plus-level classes sample run
// lengths uniformly from [1, 5]; letters are lowercase, digits 0-9. The
// sample is verified against the pattern and redrawn when adjacent runs of
// one kind would merge under tokenization; throws after too many retries.
std::string sample_value(const Pattern& domain, std::mt19937_64& rng);

std::vector<std::string> sample_column(const Pattern& domain, std::size_t values,
                                       std::mt19937_64& rng);

// `columns` columns of `values` values each, all drawn from `domain`.
// Reproducible: the same seed yields a byte-identical corpus.
std::vector<ColumnData> sample_corpus(const Pattern& domain, std::size_t columns,
                                      std::size_t values, std::uint64_t seed,
                                      const std::string& id_prefix = "synthetic");

}  // namespace plix
