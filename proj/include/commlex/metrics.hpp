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

#ifndef COMMLEX_METRICS_HPP_
#define COMMLEX_METRICS_HPP_

#include <cstdint>
#include <span>
#include <string>

#include "commlex/date.hpp"
#include "commlex/textproc.hpp"

namespace commlex {

// Per-document metric vector. uncertainty_rate stays 0 until a lexicon
// pass fills it in.
struct MetricsRecord {
  std::string doc_id;
  Date date{};
  std::int64_t word_count = 0;
  std::int64_t sentence_count = 0;
  std::int64_t syllable_count = 0;
  double ttr = 0.0;                   // 100 * types / tokens
  double mattr = 0.0;                 // moving-average TTR
  std::int64_t mattr_window = 0;
  double flesch_re = 0.0;
  double fk_grade = 0.0;
  double mean_sentence_length = 0.0;  // words per sentence
  double syllables_per_word = 0.0;
  double uncertainty_rate = 0.0;      // dictionary hits per 100 words
};

// Type-token ratio: 100 * (distinct tokens) / (total tokens), in (0, 100].
double ttr(std::span<const std::string> tokens);

// Mean TTR over every length-`window` slice at stride 1. Texts shorter than
// the window fall back to plain TTR so the metric stays total.
double mattr(std::span<const std::string> tokens, std::size_t window = 100);

// Flesch Reading Ease: 206.835 - 0.846 * (syllables per 100 words)
//                              - 1.015 * (mean sentence length).
double flesch_re(double mean_sentence_length, double syllables_per_word);

// Flesch-Kincaid grade level: 0.39 * msl + 11.8 * spw - 15.59. Applied
// verbatim; may be negative for trivially simple text.
double fk_grade(double mean_sentence_length, double syllables_per_word);

MetricsRecord compute_metrics(const TokenizedDocument& tdoc, const Date& date,
                              std::size_t window = 100);

}  // namespace commlex

#endif  // COMMLEX_METRICS_HPP_
