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
#include "plix/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plix {

namespace {

double log_choose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double fisher_exact_two_tailed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                               std::uint64_t d) {
  const std::uint64_t row1 = a + b;
  const std::uint64_t row2 = c + d;
  const std::uint64_t col1 = a + c;
  const std::uint64_t n = row1 + row2;
  if (n == 0) throw std::invalid_argument("fisher_exact_two_tailed: empty table");
  if (row1 == 0 || row2 == 0 || col1 == 0 || col1 == n) {
    return 1.0;  // degenerate margins admit a single table
  }

  const double log_denom = log_choose(n, col1);
  auto log_point = [&](std::uint64_t x) {
    return log_choose(row1, x) + log_choose(row2, col1 - x) - log_denom;
  };

  const std::uint64_t lo = col1 > row2 ? col1 - row2 : 0;
  const std::uint64_t hi = std::min(row1, col1);
  const double log_observed = log_point(a);
  const double cutoff = log_observed + std::log1p(1e-7);

  double p = 0.0;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    double lp = log_point(x);
    if (lp <= cutoff) p += std::exp(lp);
  }
  return std::min(p, 1.0);
}

double chi_squared_yates_statistic(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                   std::uint64_t d) {
  const std::uint64_t row1 = a + b;
  const std::uint64_t row2 = c + d;
  const std::uint64_t col1 = a + c;
  const std::uint64_t col2 = b + d;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    throw std::invalid_argument("chi_squared_yates: zero margin");
  }
  const double n = static_cast<double>(row1 + row2);
  const double cross =
      std::abs(static_cast<double>(a) * static_cast<double>(d) -
               static_cast<double>(b) * static_cast<double>(c));
  const double corrected = cross - n / 2.0;
  if (corrected <= 0.0) return 0.0;
  return n * corrected * corrected /
         (static_cast<double>(row1) * static_cast<double>(row2) *
          static_cast<double>(col1) * static_cast<double>(col2));
}

double chi_squared_yates(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                         std::uint64_t d) {
  const double stat = chi_squared_yates_statistic(a, b, c, d);
  return std::erfc(std::sqrt(stat / 2.0));
}

}  // namespace plix
