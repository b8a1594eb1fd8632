// Copyright 2026 The commlex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMMLEX_DATE_HPP_
#define COMMLEX_DATE_HPP_

#include <chrono>
#include <string>
#include <string_view>

namespace commlex {

// Calendar date, day precision. Comparable and hashable via sys_days.
using Date = std::chrono::year_month_day;

// Parses strict ISO-8601 "YYYY-MM-DD"; rejects impossible calendar dates.
// Throws Error(ErrorKind::MalformedDate).
Date parse_date(std::string_view text);

std::string format_date(const Date& date);

inline int date_year(const Date& date) { return int(date.year()); }

// Serial day count (days since the civil epoch); used for gap arithmetic.
inline long day_number(const Date& date) {
  return std::chrono::sys_days(date).time_since_epoch().count();
}

}  // namespace commlex

#endif  // COMMLEX_DATE_HPP_
