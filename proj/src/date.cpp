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

#include "commlex/date.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "commlex/error.hpp"

namespace commlex {

namespace {

bool parse_fixed_uint(std::string_view text, std::size_t pos, std::size_t len,
                      int& out) {
  if (pos + len > text.size()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos + i]))) return false;
  }
  auto [ptr, ec] =
      std::from_chars(text.data() + pos, text.data() + pos + len, out);
  return ec == std::errc() && ptr == text.data() + pos + len;
}

}  // namespace

Date parse_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  bool shape_ok = text.size() == 10 && text[4] == '-' && text[7] == '-' &&
                  parse_fixed_uint(text, 0, 4, y) &&
                  parse_fixed_uint(text, 5, 2, m) &&
                  parse_fixed_uint(text, 8, 2, d);
  if (!shape_ok) {
    raise(ErrorKind::MalformedDate,
          "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  Date date{std::chrono::year(y), std::chrono::month(unsigned(m)),
            std::chrono::day(unsigned(d))};
  if (!date.ok()) {
    raise(ErrorKind::MalformedDate,
          "'" + std::string(text) + "' is not a valid calendar date");
  }
  return date;
}

std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

}  // namespace commlex
