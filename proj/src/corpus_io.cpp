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
#include "plix/corpus_io.hpp"
#include "plix/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plix {

namespace fs = std::filesystem;

std::vector<fs::path> list_corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw IoError("corpus directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() || entry.is_symlink()) {
      files.push_back(fs::relative(entry.path(), dir));
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
  return files;
}

std::vector<std::string> read_value_lines(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open column file: " + file.string());
  std::vector<std::string> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    values.push_back(line);
  }
  if (in.bad()) throw IoError("error reading column file: " + file.string());
  return values;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
        } else {
          field.push_back(c);
        }
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_row();
        ++i;
        break;
      default:
        field.push_back(c);
        field_started = true;
        ++i;
        break;
    }
  }
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::vector<ColumnData> read_column_file(const fs::path& file, const std::string& id_prefix) {
  std::vector<ColumnData> columns;
  if (file.extension() == ".csv") {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open CSV file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading CSV file: " + file.string());
    auto rows = parse_csv(buf.str());
    if (rows.size() < 2) return columns;  // header only (or empty): no data columns
    const std::vector<std::string>& header = rows.front();
    columns.resize(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      columns[c].id = id_prefix + ":" + std::to_string(c) + ":" + header[c];
      columns[c].values.reserve(rows.size() - 1);
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < header.size(); ++c) {
        columns[c].values.push_back(c < rows[r].size() ? rows[r][c] : std::string());
      }
    }
    return columns;
  }
  ColumnData column;
  column.id = id_prefix;
  column.values = read_value_lines(file);
  if (!column.values.empty()) columns.push_back(std::move(column));
  return columns;
}

}  // namespace plix
