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

#include "commlex/stats.hpp"

#include <algorithm>
#include <cmath>

#include "commlex/error.hpp"
#include "commlex/kernels.hpp"

namespace commlex {

AlignRule parse_align_rule(std::string_view name) {
  if (name == "same-day") return AlignRule::SameDay;
  if (name == "last-on-or-before") return AlignRule::LastOnOrBefore;
  raise(ErrorKind::BadConfig,
        "align rule must be same-day or last-on-or-before (got '" +
            std::string(name) + "')");
}

std::string_view align_rule_name(AlignRule rule) {
  return rule == AlignRule::SameDay ? "same-day" : "last-on-or-before";
}

AlignedPair align(const TimeSeries& metric, const TimeSeries& market,
                  const AlignOptions& options) {
  if (metric.empty() || market.empty()) {
    raise(ErrorKind::EmptyInput, "align needs two non-empty series");
  }
  AlignedPair pair;
  const auto& pts = market.points;
  for (const auto& mp : metric.points) {
    auto it = std::upper_bound(pts.begin(), pts.end(), mp.date,
                               [](const Date& d, const TimePoint& p) {
                                 return std::chrono::sys_days(d) <
                                        std::chrono::sys_days(p.date);
                               });
    if (it == pts.begin()) continue;  // nothing on or before this date
    const TimePoint& candidate = *(it - 1);
    long gap = day_number(mp.date) - day_number(candidate.date);
    bool admissible =
        options.rule == AlignRule::SameDay
            ? gap == 0
            : gap <= long(options.max_staleness_days);
    if (!admissible) continue;
    pair.dates.push_back(mp.date);
    pair.x.push_back(mp.value);
    pair.y.push_back(candidate.value);
  }
  if (pair.size() < 2) {
    raise(ErrorKind::InsufficientOverlap,
          "only " + std::to_string(pair.size()) +
              " aligned points (need at least 2)");
  }
  return pair;
}

AlignedPair first_differences(const AlignedPair& pair) {
  if (pair.size() < 3) {
    raise(ErrorKind::InsufficientOverlap,
          "need at least 3 aligned points for differences, have " +
              std::to_string(pair.size()));
  }
  AlignedPair out;
  out.dates.assign(pair.dates.begin() + 1, pair.dates.end());
  out.x.resize(pair.size() - 1);
  out.y.resize(pair.size() - 1);
  for (std::size_t i = 1; i < pair.size(); ++i) {
    out.x[i - 1] = pair.x[i] - pair.x[i - 1];
    out.y[i - 1] = pair.y[i] - pair.y[i - 1];
  }
  return out;
}

namespace {

bool is_constant(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == *hi;
}

}  // namespace

double pearson(const AlignedPair& pair) {
  const std::size_t n = pair.size();
  if (n < 2) {
    raise(ErrorKind::InsufficientOverlap, "pearson needs n >= 2");
  }
  if (is_constant(pair.x) || is_constant(pair.y)) {
    raise(ErrorKind::DegenerateInput, "pearson: zero-variance margin");
  }
  const double* x = pair.x.data();
  const double* y = pair.y.data();
  double mx = kernels::sum(x, n) / double(n);
  double my = kernels::sum(y, n) / double(n);
  double sxy = kernels::centered_sumprod(x, mx, y, my, n);
  double sxx = kernels::centered_sumprod(x, mx, x, mx, n);
  double syy = kernels::centered_sumprod(y, my, y, my, n);
  return sxy / std::sqrt(sxx * syy);
}

double dcor(const AlignedPair& pair) {
  const std::size_t n = pair.size();
  if (n < 2) {
    raise(ErrorKind::InsufficientOverlap, "dcor needs n >= 2");
  }
  if (is_constant(pair.x) || is_constant(pair.y)) {
    return 0.0;  // degenerate margin: distance variance vanishes
  }
  const double* x = pair.x.data();
  const double* y = pair.y.data();

  // Row means of the |xi - xj| and |yi - yj| matrices, one row at a time;
  // the full matrices are never materialized.
  std::vector<double> arow(n), brow(n), ra(n), rb(n);
  for (std::size_t j = 0; j < n; ++j) {
    kernels::abs_dev(x[j], x, arow.data(), n);
    ra[j] = kernels::sum(arow.data(), n) / double(n);
    kernels::abs_dev(y[j], y, brow.data(), n);
    rb[j] = kernels::sum(brow.data(), n) / double(n);
  }
  double ga = kernels::sum(ra.data(), n) / double(n);
  double gb = kernels::sum(rb.data(), n) / double(n);

  double acc_ab = 0.0, acc_aa = 0.0, acc_bb = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    kernels::abs_dev(x[j], x, arow.data(), n);
    kernels::abs_dev(y[j], y, brow.data(), n);
    double ca = ra[j] - ga;
    double cb = rb[j] - gb;
    acc_ab += kernels::shifted_centered_dot(arow.data(), ra.data(), ca,
                                            brow.data(), rb.data(), cb, n);
    acc_aa += kernels::shifted_centered_dot(arow.data(), ra.data(), ca,
                                            arow.data(), ra.data(), ca, n);
    acc_bb += kernels::shifted_centered_dot(brow.data(), rb.data(), cb,
                                            brow.data(), rb.data(), cb, n);
  }
  const double n2 = double(n) * double(n);
  double dcov2 = acc_ab / n2;
  double dvarx = acc_aa / n2;
  double dvary = acc_bb / n2;
  if (dvarx <= 0.0 || dvary <= 0.0) return 0.0;
  if (dcov2 < 0.0) dcov2 = 0.0;  // rounding guard before the square root
  double r = std::sqrt(dcov2 / std::sqrt(dvarx * dvary));
  return std::min(r, 1.0);
}

CorrelationResult correlate(const AlignedPair& pair) {
  CorrelationResult result;
  result.n = pair.size();
  result.pearson = pearson(pair);
  result.dcor = dcor(pair);
  return result;
}

TimeSeries yearly_mean(const TimeSeries& series) {
  if (series.empty()) {
    raise(ErrorKind::EmptyInput, "yearly_mean over an empty series");
  }
  std::vector<TimePoint> out;
  std::size_t i = 0;
  const auto& pts = series.points;
  while (i < pts.size()) {
    int year = date_year(pts[i].date);
    double sum = 0.0;
    std::size_t count = 0;
    while (i < pts.size() && date_year(pts[i].date) == year) {
      sum += pts[i].value;
      ++count;
      ++i;
    }
    Date dec31{std::chrono::year(year), std::chrono::month(12),
               std::chrono::day(31)};
    out.push_back({dec31, sum / double(count)});
  }
  return make_series(std::move(out));
}

std::vector<double> moving_average_values(const std::vector<double>& values,
                                          std::size_t k) {
  const std::size_t n = values.size();
  if (k % 2 == 0 || k == 0) {
    raise(ErrorKind::BadConfig, "moving average width must be odd");
  }
  if (k > n) {
    raise(ErrorKind::BadConfig,
          "moving average width " + std::to_string(k) + " exceeds series size " +
              std::to_string(n));
  }
  std::vector<double> out(n);
  const std::size_t half = k / 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t h = std::min({half, i, n - 1 - i});
    double sum = 0.0;
    for (std::size_t j = i - h; j <= i + h; ++j) sum += values[j];
    out[i] = sum / double(2 * h + 1);
  }
  return out;
}

TimeSeries moving_average(const TimeSeries& series, std::size_t k) {
  std::vector<double> values;
  values.reserve(series.size());
  for (const auto& p : series.points) values.push_back(p.value);
  std::vector<double> smooth = moving_average_values(values, k);
  std::vector<TimePoint> out(series.points);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].value = smooth[i];
  TimeSeries result;
  result.points = std::move(out);
  return result;
}

}  // namespace commlex
