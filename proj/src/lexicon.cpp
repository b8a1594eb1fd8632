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

#include "commlex/lexicon.hpp"

#include <fstream>

#include "commlex/error.hpp"

namespace commlex {

Lexicon load_lexicon(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::Io, "cannot read lexicon '" + path.string() + "'");
  }
  Lexicon lex;
  lex.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    std::string_view body(line);
    if (hash != std::string::npos) body = body.substr(0, hash);
    // entries are normalized exactly like corpus tokens so matches are exact
    auto tokens = tokenize_words(body);
    if (tokens.empty()) {
      bool blank = body.find_first_not_of(" \t\r\n") == std::string_view::npos;
      if (blank) continue;
      raise(ErrorKind::InvalidLexiconEntry,
            path.string() + ":" + std::to_string(line_no) +
                ": no alphabetic character in '" + std::string(body) + "'");
    }
    if (tokens.size() > 1) {
      raise(ErrorKind::InvalidLexiconEntry,
            path.string() + ":" + std::to_string(line_no) +
                ": expected one word per line, got '" + std::string(body) +
                "'");
    }
    lex.words.insert(std::move(tokens.front()));
  }
  if (lex.words.empty()) {
    raise(ErrorKind::EmptyLexicon, "lexicon '" + path.string() + "' is empty");
  }
  return lex;
}

UncertaintyRecord uncertainty_rate(const TokenizedDocument& tdoc,
                                   const Lexicon& lex) {
  if (tdoc.total_words == 0) {
    raise(ErrorKind::EmptyDocument,
          "document '" + tdoc.doc_id + "' has no word tokens");
  }
  UncertaintyRecord rec;
  rec.doc_id = tdoc.doc_id;
  rec.word_count = std::int64_t(tdoc.total_words);
  for (const auto& word : tdoc.words) {
    if (lex.words.count(word)) ++rec.hits;
  }
  rec.rate = 100.0 * double(rec.hits) / double(rec.word_count);
  return rec;
}

TimeSeries uncertainty_series(std::span<const TokenizedDocument> tdocs,
                              std::span<MetricsRecord> records,
                              const Lexicon& lex, bool collapse_same_date) {
  if (tdocs.empty()) {
    raise(ErrorKind::EmptyInput, "uncertainty_series over no documents");
  }
  if (tdocs.size() != records.size()) {
    raise(ErrorKind::BadConfig,
          "tokenized documents and metrics records differ in length");
  }
  std::vector<TimePoint> points;
  points.reserve(records.size());
  // Inputs arrive in corpus order: ascending (date, id). Same-date runs are
  // collapsed to their mean so the series dates stay strictly increasing.
  double run_sum = 0.0;
  std::size_t run_len = 0;
  for (std::size_t i = 0; i < tdocs.size(); ++i) {
    UncertaintyRecord rec = uncertainty_rate(tdocs[i], lex);
    records[i].uncertainty_rate = rec.rate;
    const Date& date = records[i].date;
    if (run_len > 0 && points.back().date == date) {
      if (!collapse_same_date) {
        raise(ErrorKind::DuplicateDate,
              "documents share date " + format_date(date) +
                  " and collapsing is disabled");
      }
      run_sum += rec.rate;
      ++run_len;
      points.back().value = run_sum / double(run_len);
    } else {
      run_sum = rec.rate;
      run_len = 1;
      points.push_back({date, rec.rate});
    }
  }
  return make_series(std::move(points));
}

}  // namespace commlex
