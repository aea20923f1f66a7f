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

namespace plix {

// Two-tailed Fisher exact test on the 2x2 table
//   a b
//   c d
// Sums the hypergeometric probabilities of every table with the same margins
// whose point probability is at most the observed one (with 1e-7 relative
// slack for float ties). Computed in log space so large counts stay stable.
double fisher_exact_two_tailed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                               std::uint64_t d);

// Yates-corrected chi-squared statistic for the same table:
//   N * (|ad - bc| - N/2)^2 / ((a+b)(c+d)(a+c)(b+d))
// clamped at zero when the continuity correction exceeds |ad - bc|.
// Throws std::invalid_argument when any margin is zero.
double chi_squared_yates_statistic(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                   std::uint64_t d);

// Upper-tail p-value of the statistic above, via the one-degree-of-freedom
// chi-squared survival function p = erfc(sqrt(x/2)).
double chi_squared_yates(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                         std::uint64_t d);

}  // namespace plix
