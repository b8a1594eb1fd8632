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

#ifndef COMMLEX_CORPUS_HPP_
#define COMMLEX_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "commlex/date.hpp"

namespace commlex {

// One dated announcement. Text is stored verbatim; all normalization
// happens at tokenization time.
struct Document {
  std::string id;
  Date date{};
  std::string source;
  std::string text;
};

// Documents sorted ascending by (date, id), unique ids, non-blank text.
struct Corpus {
  std::vector<Document> documents;
};

enum class CorpusFormat { DirOfTxt, Csv, Jsonl };

// Validates and orders: sorts by (date, id), rejects duplicate ids and
// documents whose text is empty after whitespace trimming.
Corpus make_corpus(std::vector<Document> documents);

// dir-of-txt: every *.txt file must be named YYYY-MM-DD[_suffix].txt; the
//   file stem becomes the document id.
// csv: header date,text with optional id and source columns, RFC-4180.
// jsonl: one object per line with id, date, source, text.
// `default_source` fills Document::source where the input has none.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   std::string_view default_source = "");

void save_corpus_jsonl(const Corpus& corpus, const std::filesystem::path& path);

CorpusFormat parse_corpus_format(std::string_view name);  // "dir"|"csv"|"jsonl"

// Directory -> dir-of-txt; .csv -> csv; .jsonl/.ndjson -> jsonl.
CorpusFormat detect_corpus_format(const std::filesystem::path& path);

}  // namespace commlex

#endif  // COMMLEX_CORPUS_HPP_
