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

#ifndef COMMLEX_LEXICON_HPP_
#define COMMLEX_LEXICON_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>

#include "commlex/metrics.hpp"
#include "commlex/textproc.hpp"
#include "commlex/timeseries.hpp"

namespace commlex {

// A named word category (e.g. "uncertainty"): lowercase entries, matched
// case-insensitively against normalized tokens.
struct Lexicon {
  std::string name;
  std::unordered_set<std::string> words;
};

// One word per line, '#' comments allowed. Entries are case-folded and
// deduplicated; an entry without an alphabetic character is an error, as is
// an empty lexicon.
Lexicon load_lexicon(const std::filesystem::path& path, std::string name);

struct UncertaintyRecord {
  std::string doc_id;
  std::int64_t hits = 0;
  std::int64_t word_count = 0;
  double rate = 0.0;  // 100 * hits / word_count
};

// Strictly unigram with multiplicity: every token occurrence that exactly
// equals a lexicon entry counts one hit; surrounding context never flips a
// hit ("uncertainty declined" still counts "uncertainty").
UncertaintyRecord uncertainty_rate(const TokenizedDocument& tdoc,
                                   const Lexicon& lex);

// Scores every document, writes the rate back into the parallel
// MetricsRecord, and returns the date-ordered rate series. Documents sharing
// a date are collapsed to their mean rate (id order) so the series stays
// strictly increasing; with collapse_same_date=false duplicate dates are an
// error instead.
TimeSeries uncertainty_series(std::span<const TokenizedDocument> tdocs,
                              std::span<MetricsRecord> records,
                              const Lexicon& lex,
                              bool collapse_same_date = true);

}  // namespace commlex

#endif  // COMMLEX_LEXICON_HPP_
