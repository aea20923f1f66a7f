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
#include "plix/index.hpp"
#include "plix/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace plix {

namespace {

constexpr char kMagic[4] = {'P', 'L', 'I', 'X'};
constexpr std::uint16_t kFormatVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "index format serialization assumes a little-endian host");

template <typename T>
void append_le(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T read_le(const std::string& data, std::size_t& off) {
  if (off + sizeof(T) > data.size()) {
    throw std::runtime_error("index file truncated");
  }
  T value;
  std::memcpy(&value, data.data() + off, sizeof(T));
  off += sizeof(T);
  return value;
}

}  // namespace

std::optional<IndexEntry> CorpusIndex::lookup(const std::string& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void CorpusIndex::save(const std::filesystem::path& path) const {
  std::vector<const std::pair<const std::string, IndexEntry>*> sorted;
  sorted.reserve(table_.size());
  for (const auto& kv : table_) sorted.push_back(&kv);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });

  std::string body;
  body.reserve(32 + table_.size() * 48);
  body.append(kMagic, sizeof(kMagic));
  append_le(body, kFormatVersion);
  append_le(body, params_.tau);
  append_le(body, params_.cap);
  body.append(reinterpret_cast<const char*>(params_.hierarchy_fingerprint.data()),
              params_.hierarchy_fingerprint.size());
  append_le(body, static_cast<std::uint64_t>(sorted.size()));
  for (const auto* kv : sorted) {
    append_le(body, static_cast<std::uint32_t>(kv->first.size()));
    body.append(kv->first);
    append_le(body, kv->second.fpr);
    append_le(body, kv->second.cov);
  }
  std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(crc32(0L, nullptr, 0), reinterpret_cast<const Bytef*>(body.data()),
            static_cast<uInt>(body.size())));
  append_le(body, crc);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open index file for writing: " + path.string());
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("failed to write index file: " + path.string());
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index file: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < sizeof(kMagic) + sizeof(kFormatVersion) + 4) {
    throw std::runtime_error("index file truncated: " + path.string());
  }
  if (std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error("not an index file (bad magic): " + path.string());
  }
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, data.data() + data.size() - 4, 4);
  std::uint32_t actual_crc = static_cast<std::uint32_t>(
      crc32(crc32(0L, nullptr, 0), reinterpret_cast<const Bytef*>(data.data()),
            static_cast<uInt>(data.size() - 4)));
  if (stored_crc != actual_crc) {
    throw std::runtime_error("index file checksum mismatch: " + path.string());
  }

  std::size_t off = sizeof(kMagic);
  std::uint16_t version = read_le<std::uint16_t>(data, off);
  if (version != kFormatVersion) {
    throw std::runtime_error("unsupported index format version " + std::to_string(version));
  }
  IndexParams params;
  params.tau = read_le<std::uint32_t>(data, off);
  params.cap = read_le<std::uint64_t>(data, off);
  if (off + params.hierarchy_fingerprint.size() > data.size()) {
    throw std::runtime_error("index file truncated");
  }
  std::memcpy(params.hierarchy_fingerprint.data(), data.data() + off,
              params.hierarchy_fingerprint.size());
  off += params.hierarchy_fingerprint.size();

  std::uint64_t count = read_le<std::uint64_t>(data, off);
  std::unordered_map<std::string, IndexEntry> table;
  table.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t len = read_le<std::uint32_t>(data, off);
    if (off + len > data.size()) throw std::runtime_error("index file truncated");
    std::string key(data.data() + off, len);
    off += len;
    IndexEntry entry;
    entry.fpr = read_le<double>(data, off);
    entry.cov = read_le<std::uint64_t>(data, off);
    Pattern::parse(key);  // every stored key must be a valid canonical pattern
    table.emplace(std::move(key), entry);
  }
  if (off != data.size() - 4) {
    throw std::runtime_error("index file has trailing garbage: " + path.string());
  }
  return CorpusIndex(params, std::move(table));
}

}  // namespace plix
