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

#ifndef COMMLEX_STATS_HPP_
#define COMMLEX_STATS_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "commlex/date.hpp"
#include "commlex/timeseries.hpp"

namespace commlex {

// Two series matched date-by-date: x from the metric series, y from the
// market series. Dates strictly increasing, n >= 2, all values finite.
struct AlignedPair {
  std::vector<Date> dates;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return dates.size(); }
};

enum class AlignRule { SameDay, LastOnOrBefore };

struct AlignOptions {
  AlignRule rule = AlignRule::LastOnOrBefore;
  // Announcements can fall on non-trading days; the cap keeps a metric point
  // from pairing with a quote more than this many days old.
  int max_staleness_days = 7;
};

AlignRule parse_align_rule(std::string_view name);
std::string_view align_rule_name(AlignRule rule);

// Pairs each metric date with a market value per the rule; metric dates with
// no admissible market value are dropped. Fewer than 2 surviving pairs is an
// error.
AlignedPair align(const TimeSeries& metric, const TimeSeries& market,
                  const AlignOptions& options = {});

// Point-to-point first differences; output has n-1 pairs dated at the later
// point of each step.
AlignedPair first_differences(const AlignedPair& pair);

// Sample Pearson correlation coefficient. A constant margin is a
// degenerate-input error.
double pearson(const AlignedPair& pair);

// Distance correlation (biased V-statistic): pairwise |xj - xk| matrices are
// double-centered by row, column, and grand means; dCov^2 = mean(A.B) and
// dCor = dCov / sqrt(dVar_x * dVar_y). A constant margin yields 0. Tiny
// negative dCov^2 from rounding is clamped to 0 before the square root.
double dcor(const AlignedPair& pair);

struct CorrelationResult {
  std::size_t n = 0;
  double pearson = 0.0;
  double dcor = 0.0;
};

CorrelationResult correlate(const AlignedPair& pair);

// One point per calendar year, dated Dec-31, holding that year's arithmetic
// mean. Years with no data are absent.
TimeSeries yearly_mean(const TimeSeries& series);

// Centered k-point moving average (k odd, k <= n); endpoints shrink to the
// widest symmetric window that fits.
TimeSeries moving_average(const TimeSeries& series, std::size_t k);

// Same smoother over a bare value vector (row-aligned table columns).
std::vector<double> moving_average_values(const std::vector<double>& values,
                                          std::size_t k);

}  // namespace commlex

#endif  // COMMLEX_STATS_HPP_
