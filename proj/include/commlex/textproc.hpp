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

#ifndef COMMLEX_TEXTPROC_HPP_
#define COMMLEX_TEXTPROC_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "commlex/corpus.hpp"

namespace commlex {

// Sentence segmentation knobs. Abbreviations are matched case-sensitively
// against the word preceding a period, with its trailing periods stripped
// ("Fig." matches the entry "Fig", "e.g." matches "e.g").
struct TokenizerOptions {
  std::vector<std::string> abbreviations;
  bool semicolon_breaks = true;

  static TokenizerOptions defaults();
};

// Built-in non-breaking prefixes: e.g, i.e, etc, vs, Mr, Dr, Fig, Eq, No.
const std::vector<std::string>& default_abbreviations();

// One abbreviation per line; blank lines and '#' comment lines are skipped.
std::vector<std::string> load_abbreviations(const std::filesystem::path& path);

// Splits on sentence terminators (. ? ! and, by default, ;) at word ends,
// and on blank-line paragraph breaks. Periods inside a word (decimals like
// 0.5, abbreviation internals like e.g.) never split. Returned sentences are
// trimmed slices of the input; their concatenation covers every
// non-whitespace character of the input, in order.
std::vector<std::string> segment_sentences(
    std::string_view text,
    const TokenizerOptions& options = TokenizerOptions::defaults());

// Word tokens: maximal runs of alphabetic characters, optionally joined by
// interior apostrophes or hyphens, case-folded to lowercase. Digit runs and
// punctuation are discarded; a trailing apostrophe is stripped.
std::vector<std::string> tokenize_words(std::string_view text);

// Heuristic syllable count: number of maximal vowel groups (a e i o u y),
// with a terminal silent "e" (also "-es"/"-ed" after most consonants) not
// counted; consonant+"le" endings keep their group. Hyphenated tokens sum
// over their parts. Always >= 1.
int count_syllables(std::string_view word);

struct TokenizedDocument {
  std::string doc_id;
  std::vector<std::string> sentences;
  std::vector<std::string> words;      // normalized lowercase tokens
  std::vector<int> syllables;          // parallel to words, each >= 1
  std::size_t total_words = 0;
  std::size_t total_sentences = 0;
  std::size_t total_syllables = 0;
};

// Deterministic composition of the three passes above. A document that
// yields no word tokens is an error (downstream ratios would divide by 0).
TokenizedDocument tokenize_document(
    const Document& doc,
    const TokenizerOptions& options = TokenizerOptions::defaults());

}  // namespace commlex

#endif  // COMMLEX_TEXTPROC_HPP_
