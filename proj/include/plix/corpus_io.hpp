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

#include <filesystem>
#include <string>
#include <vector>

namespace plix {

struct ColumnData {
  std::string id;
  std::vector<std::string> values;
};

// All regular files under `dir`, as paths relative to it, sorted by path so
// scans are order-stable across runs and machines.
std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& dir);

// Reads one corpus file into columns. `*.csv` files contribute one column per
// CSV column (header row supplies names); anything else is a plain text
// column with one value per line. Throws on I/O errors.
std::vector<ColumnData> read_column_file(const std::filesystem::path& file,
                                         const std::string& id_prefix);

// One value per line; a trailing newline does not produce an empty value.
std::vector<std::string> read_value_lines(const std::filesystem::path& file);

// Minimal RFC-4180 row parser: quoted fields, doubled-quote escapes, CRLF.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace plix
