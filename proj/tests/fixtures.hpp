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

#include <string>
#include <vector>

namespace plixtest {

// A twelve-value timestamp column: four with single-digit hours, six more
// with two-digit hours (all "AM"), and two "PM" stragglers. The three rule
// candidates below have impurities 2/12, 8/12 and 0 on it.
inline std::vector<std::string> timestamp_column() {
  return {
      "9/12/2019 3:01:32 AM",  "9/12/2019 7:22:10 AM",  "9/13/2019 8:05:41 AM",
      "9/14/2019 9:15:02 AM",  "9/12/2019 10:02:20 AM", "9/12/2019 11:45:33 AM",
      "9/13/2019 12:01:32 AM", "9/14/2019 10:08:09 AM", "9/15/2019 11:59:59 AM",
      "9/16/2019 12:30:45 AM", "9/12/2019 12:01:32 PM", "9/16/2019 10:02:20 PM",
  };
}

// Narrow rule pinned to the "AM" suffix: the two PM values fail it.
inline std::string rule_am_only() {
  return "<digit>+/<digit>{2}/<digit>{4} <digit>+:<digit>{2}:<digit>{2} AM";
}

// Narrow rule pinned to single-digit hours: the eight two-digit-hour values
// fail it.
inline std::string rule_single_digit_hour() {
  return "<digit>+/<digit>{2}/<digit>{4} <digit>:<digit>{2}:<digit>{2} <letter>{2}";
}

// The well-generalized rule every value matches.
inline std::string rule_timestamp() {
  return "<digit>+/<digit>{2}/<digit>{4} <digit>+:<digit>{2}:<digit>{2} <letter>{2}";
}

// A query column the narrow rules are still consistent with (single-digit
// hours, all AM), so all three rules sit in its hypothesis space.
inline std::vector<std::string> timestamp_query_column() {
  return {
      "9/12/2019 3:01:32 AM", "9/13/2019 4:02:10 AM", "9/14/2019 5:03:20 AM",
      "9/15/2019 6:04:30 AM", "9/16/2019 7:05:40 AM", "9/17/2019 8:06:50 AM",
      "9/18/2019 9:07:59 AM", "9/19/2019 2:08:11 AM", "9/20/2019 1:09:22 AM",
      "9/21/2019 3:10:33 AM",
  };
}

}  // namespace plixtest
