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

#ifndef COMMLEX_CLI_HPP_
#define COMMLEX_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "commlex/corpus.hpp"
#include "commlex/stats.hpp"

namespace commlex {

struct CorpusSpec {
  std::string label;  // source label, grouping key for compare
  std::string path;
};

enum class EmitFormat { Csv, Json };

struct RunConfig {
  std::vector<CorpusSpec> corpora;      // at least one
  std::optional<CorpusFormat> corpus_format;  // nullopt: detect per path
  std::string lexicon_path;             // empty: uncertainty_rate stays 0
  std::string lexicon_name = "uncertainty";
  std::string market_path;              // required by correlate
  std::size_t mattr_window = 100;
  AlignOptions align;
  bool differences = false;             // correlate on first differences
  EmitFormat emit = EmitFormat::Csv;
  std::string out_path;                 // empty: stdout
  std::size_t trend_k = 0;              // 0: no trend columns (odd otherwise)
  std::string abbrev_path;              // empty: built-in list
};

// Per-document metrics table, sorted by (source, date, id). The table holds
// exactly the MetricsRecord fields; --trend-k appends per-source
// moving-average columns. Written to config.out_path or `out`.
void run_analyze(const RunConfig& config, std::ostream& out);

// Prints n, pearson, dcor, alignment rule, and mode to `out`, and writes the
// aligned (date, metric, market) rows to config.out_path (or after the
// summary when no path is given).
void run_correlate(const RunConfig& config, std::ostream& out);

// Long-format (source, year, metric, value) table of yearly mean fk_grade
// and mattr per source. Requires at least two corpora.
void run_compare(const RunConfig& config, std::ostream& out);

}  // namespace commlex

#endif  // COMMLEX_CLI_HPP_
