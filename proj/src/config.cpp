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
#include "plix/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace plix {

void Config::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed config file " + path.string() + ": " + e.what());
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "tau") {
      tau = value.get<std::uint32_t>();
    } else if (key == "cap") {
      cap = value.get<std::uint64_t>();
    } else if (key == "r") {
      r = value.get<double>();
    } else if (key == "m") {
      m = value.get<std::uint64_t>();
    } else if (key == "theta") {
      theta = value.get<double>();
    } else if (key == "alpha") {
      alpha = value.get<double>();
    } else if (key == "test") {
      test = value.get<std::string>();
    } else if (key == "objective") {
      objective = value.get<std::string>();
    } else if (key == "hierarchy") {
      hierarchy_path = value.get<std::string>();
    } else if (key == "workers") {
      workers = value.get<unsigned>();
    } else if (key == "value_cap") {
      value_cap = value.get<std::uint64_t>();
    } else if (key == "seed") {
      seed = value.get<std::uint64_t>();
    } else if (key == "dedup") {
      dedup = value.get<bool>();
    } else if (key == "merge_decimal") {
      merge_decimal = value.get<bool>();
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
}

void Config::validate() const {
  if (tau == 0) throw std::runtime_error("config: tau must be >= 1");
  if (cap == 0) throw std::runtime_error("config: cap must be >= 1");
  if (r < 0.0 || r > 1.0) throw std::runtime_error("config: r must be in [0, 1]");
  if (m == 0) throw std::runtime_error("config: m must be >= 1");
  if (theta < 0.0 || theta >= 1.0) throw std::runtime_error("config: theta must be in [0, 1)");
  if (alpha <= 0.0 || alpha >= 1.0) throw std::runtime_error("config: alpha must be in (0, 1)");
  if (test != "fisher-exact" && test != "chi-squared-yates") {
    throw std::runtime_error("config: test must be fisher-exact or chi-squared-yates");
  }
  if (objective != "fpr-minimizing" && objective != "coverage-minimizing") {
    throw std::runtime_error("config: objective must be fpr-minimizing or coverage-minimizing");
  }
}

}  // namespace plix
