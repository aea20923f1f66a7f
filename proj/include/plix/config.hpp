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
#include <filesystem>
#include <string>

namespace plix {

// Runtime knobs shared by the CLI subcommands. Values come from the module
// defaults, then a JSON config file, then command-line flags, in that order.
struct Config {
  std::uint32_t tau = 8;
  std::uint64_t cap = 100000;
  double r = 0.02;        // max estimated FPR
  std::uint64_t m = 100;  // min corpus coverage
  double theta = 0.05;    // horizontal-cut tolerance; 0 disables the cut
  double alpha = 0.01;
  std::string test = "fisher-exact";
  std::string objective = "fpr-minimizing";
  std::string hierarchy_path;  // empty: built-in hierarchy
  unsigned workers = 1;
  std::uint64_t value_cap = 0;  // benchmark per-column cap; 0 keeps everything
  std::uint64_t seed = 42;
  bool dedup = false;
  bool merge_decimal = false;

  // Loads overrides from a JSON file; unknown keys are an error. Numeric
  // ranges are checked in validate().
  void load_file(const std::filesystem::path& path);
  void validate() const;
};

}  // namespace plix
