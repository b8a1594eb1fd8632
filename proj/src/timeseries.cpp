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

#include "commlex/timeseries.hpp"

#include <charconv>
#include <cmath>

#include "commlex/csv.hpp"
#include "commlex/error.hpp"

namespace commlex {

TimeSeries make_series(std::vector<TimePoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].value)) {
      raise(ErrorKind::NonFiniteValue,
            "non-finite value at " + format_date(points[i].date));
    }
    if (i > 0) {
      if (points[i].date == points[i - 1].date) {
        raise(ErrorKind::DuplicateDate,
              "duplicate date " + format_date(points[i].date));
      }
      if (points[i].date < points[i - 1].date) {
        raise(ErrorKind::DateOrder,
              format_date(points[i].date) + " follows " +
                  format_date(points[i - 1].date));
      }
    }
  }
  TimeSeries series;
  series.points = std::move(points);
  return series;
}

TimeSeries load_series(const std::filesystem::path& path) {
  CsvTable table = read_csv(path);
  int date_col = table.column("date");
  int value_col = table.column("value");
  if (date_col < 0 || value_col < 0) {
    raise(ErrorKind::Parse,
          "'" + path.string() + "': header must contain date and value");
  }
  std::vector<TimePoint> points;
  points.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    TimePoint p;
    p.date = parse_date(row[std::size_t(date_col)]);
    const std::string& raw = row[std::size_t(value_col)];
    const char* first = raw.data();
    const char* last = raw.data() + raw.size();
    auto [ptr, ec] = std::from_chars(first, last, p.value);
    if (ec != std::errc() || ptr != last) {
      raise(ErrorKind::Parse, "'" + path.string() + "' row " +
                                  std::to_string(r + 1) +
                                  ": bad value '" + raw + "'");
    }
    points.push_back(p);
  }
  return make_series(std::move(points));
}

}  // namespace commlex
