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

#ifndef COMMLEX_TIMESERIES_HPP_
#define COMMLEX_TIMESERIES_HPP_

#include <filesystem>
#include <vector>

#include "commlex/date.hpp"

namespace commlex {

struct TimePoint {
  Date date{};
  double value = 0.0;
};

// Strictly increasing dates, finite values.
struct TimeSeries {
  std::vector<TimePoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Checks the invariants; throws on violation.
TimeSeries make_series(std::vector<TimePoint> points);

// CSV with header "date,value", ISO-8601 dates. Duplicate or out-of-order
// dates and non-finite values are errors.
TimeSeries load_series(const std::filesystem::path& path);

}  // namespace commlex

#endif  // COMMLEX_TIMESERIES_HPP_
