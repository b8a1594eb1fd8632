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

#include "commlex/metrics.hpp"

#include <cmath>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "commlex/error.hpp"

namespace commlex {

double ttr(std::span<const std::string> tokens) {
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "ttr over an empty token list");
  }
  std::unordered_set<std::string_view> types;
  types.reserve(tokens.size());
  for (const auto& t : tokens) types.insert(t);
  return 100.0 * double(types.size()) / double(tokens.size());
}

double mattr(std::span<const std::string> tokens, std::size_t window) {
  if (window < 1) raise(ErrorKind::BadConfig, "mattr window must be >= 1");
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "mattr over an empty token list");
  }
  const std::size_t n = tokens.size();
  if (n <= window) return ttr(tokens);

  // One pass, stride 1: keep token multiplicities for the current window.
  std::unordered_map<std::string_view, std::size_t> counts;
  counts.reserve(window * 2);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < window; ++i) {
    if (++counts[tokens[i]] == 1) ++distinct;
  }
  double sum = 100.0 * double(distinct) / double(window);
  for (std::size_t i = window; i < n; ++i) {
    auto out = counts.find(tokens[i - window]);
    if (--out->second == 0) {
      counts.erase(out);
      --distinct;
    }
    if (++counts[tokens[i]] == 1) ++distinct;
    sum += 100.0 * double(distinct) / double(window);
  }
  return sum / double(n - window + 1);
}

namespace {

void require_finite(double msl, double spw, const char* where) {
  if (!std::isfinite(msl) || !std::isfinite(spw)) {
    raise(ErrorKind::NonFiniteValue, std::string(where) + ": non-finite input");
  }
}

}  // namespace

double flesch_re(double mean_sentence_length, double syllables_per_word) {
  require_finite(mean_sentence_length, syllables_per_word, "flesch_re");
  return 206.835 - 0.846 * (100.0 * syllables_per_word) -
         1.015 * mean_sentence_length;
}

double fk_grade(double mean_sentence_length, double syllables_per_word) {
  require_finite(mean_sentence_length, syllables_per_word, "fk_grade");
  return 0.39 * mean_sentence_length + 11.8 * syllables_per_word - 15.59;
}

MetricsRecord compute_metrics(const TokenizedDocument& tdoc, const Date& date,
                              std::size_t window) {
  if (tdoc.total_words == 0) {
    raise(ErrorKind::EmptyDocument,
          "document '" + tdoc.doc_id + "' has no word tokens");
  }
  MetricsRecord rec;
  rec.doc_id = tdoc.doc_id;
  rec.date = date;
  rec.word_count = std::int64_t(tdoc.total_words);
  rec.sentence_count = std::int64_t(tdoc.total_sentences);
  rec.syllable_count = std::int64_t(tdoc.total_syllables);
  rec.ttr = ttr(tdoc.words);
  rec.mattr = mattr(tdoc.words, window);
  rec.mattr_window = std::int64_t(window);
  rec.mean_sentence_length =
      double(rec.word_count) / double(rec.sentence_count);
  rec.syllables_per_word = double(rec.syllable_count) / double(rec.word_count);
  rec.flesch_re = flesch_re(rec.mean_sentence_length, rec.syllables_per_word);
  rec.fk_grade = fk_grade(rec.mean_sentence_length, rec.syllables_per_word);
  rec.uncertainty_rate = 0.0;  // lexicon pass fills this in
  return rec;
}

}  // namespace commlex
