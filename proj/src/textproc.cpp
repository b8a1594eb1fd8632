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

#include "commlex/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "commlex/error.hpp"

namespace commlex {

namespace {

// ---------------------------------------------------------------------------
// Code points. Announcement corpora are UTF-8; classification and folding
// cover ASCII plus the common European blocks (Latin-1/Extended, Greek,
// Cyrillic, Hebrew). Anything else is treated as a separator.
// ---------------------------------------------------------------------------

using CodePoint = char32_t;

constexpr CodePoint kInvalid = 0xFFFD;

CodePoint next_code_point(std::string_view text, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(text[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = (b0 >= 0xF0) ? 4 : (b0 >= 0xE0) ? 3 : (b0 >= 0xC0) ? 2 : 1;
  if (len == 1 || i + std::size_t(len) > text.size()) {
    ++i;  // stray continuation or truncated sequence
    return kInvalid;
  }
  CodePoint cp = b0 & (0x7F >> len);
  for (int k = 1; k < len; ++k) {
    unsigned char b = static_cast<unsigned char>(text[i + std::size_t(k)]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += std::size_t(len);
  return cp;
}

bool is_letter(CodePoint cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;  // Latin-1
  if (cp >= 0x100 && cp <= 0x24F) return true;   // Latin Extended-A/B
  if (cp >= 0x386 && cp <= 0x3CE) return cp != 0x387;  // Greek
  if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;   // Hebrew
  return false;
}

bool is_digit_cp(CodePoint cp) { return cp >= '0' && cp <= '9'; }

CodePoint fold_case(CodePoint cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  if (cp >= 0x100 && cp <= 0x17F) {            // Latin Extended-A pairs
    if (cp == 0x178) return 0xFF;              // Y with diaeresis
    if (cp <= 0x137 || (cp >= 0x14A && cp <= 0x177)) {
      return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    return cp;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

void append_utf8(std::string& out, CodePoint cp) {
  if (cp < 0x80) {
    out += char(cp);
  } else if (cp < 0x800) {
    out += char(0xC0 | (cp >> 6));
    out += char(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += char(0xE0 | (cp >> 12));
    out += char(0x80 | ((cp >> 6) & 0x3F));
    out += char(0x80 | (cp & 0x3F));
  } else {
    out += char(0xF0 | (cp >> 18));
    out += char(0x80 | ((cp >> 12) & 0x3F));
    out += char(0x80 | ((cp >> 6) & 0x3F));
    out += char(0x80 | (cp & 0x3F));
  }
}

bool is_apostrophe(CodePoint cp) { return cp == '\'' || cp == 0x2019; }

bool is_hyphen(CodePoint cp) {
  return cp == '-' || cp == 0x2010 || cp == 0x2011;
}

bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space_byte(s[b])) ++b;
  while (e > b && is_space_byte(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

// ---------------------------------------------------------------------------
// Sentence segmentation
// ---------------------------------------------------------------------------

const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> kDefaults = {
      "e.g", "i.e", "etc", "vs", "Mr", "Dr", "Fig", "Eq", "No",
  };
  return kDefaults;
}

TokenizerOptions TokenizerOptions::defaults() {
  TokenizerOptions options;
  options.abbreviations = default_abbreviations();
  return options;
}

std::vector<std::string> load_abbreviations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::Io, "cannot read abbreviation list '" + path.string() + "'");
  }
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    entries.emplace_back(t);
  }
  return entries;
}

namespace {

bool is_terminator(char c, bool semicolon_breaks) {
  return c == '.' || c == '?' || c == '!' || (semicolon_breaks && c == ';');
}

bool is_closing_punct(char c) {
  return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'';
}

// A whitespace-delimited word ends the sentence when it carries a trailing
// terminator run (closing quotes/brackets may follow it). A run of periods
// only defers to the abbreviation list: the word with its trailing periods
// stripped is looked up verbatim ("Fig." -> "Fig", "e.g." -> "e.g").
// Word-interior periods (decimals, abbreviation internals) are never
// boundaries.
bool word_ends_sentence(std::string_view word, const TokenizerOptions& opt) {
  std::size_t end = word.size();
  while (end > 0 && is_closing_punct(word[end - 1])) --end;
  if (end == 0) return false;
  char last = word[end - 1];
  if (!is_terminator(last, opt.semicolon_breaks)) return false;
  if (last != '.') return true;
  std::size_t core_end = end;
  while (core_end > 0 && word[core_end - 1] == '.') --core_end;
  if (core_end == 0) return true;  // a bare "..." still closes the sentence
  std::string_view core = word.substr(0, core_end);
  for (const auto& abbrev : opt.abbreviations) {
    if (core == abbrev) return false;
    // quoted or parenthesized abbreviation: "(e.g." etc.
    if (core.size() > abbrev.size() &&
        core.compare(core.size() - abbrev.size(), abbrev.size(), abbrev) == 0 &&
        !std::isalnum(static_cast<unsigned char>(
            core[core.size() - abbrev.size() - 1]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> segment_sentences(std::string_view text,
                                           const TokenizerOptions& options) {
  std::vector<std::string> sentences;
  std::size_t sentence_start = 0;

  auto flush = [&](std::size_t end) {
    std::string_view s = trim(text.substr(sentence_start, end - sentence_start));
    if (!s.empty()) sentences.emplace_back(s);
    sentence_start = end;
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space_byte(text[i])) {
      // A blank line (two newlines with only spaces between) is a paragraph
      // break and closes any open sentence.
      std::size_t ws_end = i;
      int newlines = 0;
      while (ws_end < n && is_space_byte(text[ws_end])) {
        if (text[ws_end] == '\n') ++newlines;
        ++ws_end;
      }
      if (newlines >= 2) flush(ws_end);
      i = ws_end;
      continue;
    }
    std::size_t word_start = i;
    while (i < n && !is_space_byte(text[i])) ++i;
    std::string_view word = text.substr(word_start, i - word_start);
    if (word_ends_sentence(word, options)) flush(i);
  }
  flush(n);
  return sentences;
}

// ---------------------------------------------------------------------------
// Word tokenization
// ---------------------------------------------------------------------------

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool has_letter = false;

  auto flush = [&] {
    if (has_letter) tokens.push_back(current);
    current.clear();
    has_letter = false;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t at = i;
    CodePoint cp = next_code_point(text, i);
    if (is_letter(cp)) {
      append_utf8(current, fold_case(cp));
      has_letter = true;
      continue;
    }
    if ((is_apostrophe(cp) || is_hyphen(cp)) && has_letter) {
      // interior only: a letter must follow directly
      std::size_t peek = i;
      if (peek < text.size()) {
        CodePoint next = next_code_point(text, peek);
        if (is_letter(next)) {
          current += is_hyphen(cp) ? '-' : '\'';
          continue;
        }
      }
    }
    (void)at;
    if (is_digit_cp(cp)) {
      // digits split tokens but are not tokens themselves ("q1" -> "q")
      flush();
      continue;
    }
    flush();
  }
  flush();
  return tokens;
}

// ---------------------------------------------------------------------------
// Syllable heuristic
// ---------------------------------------------------------------------------

namespace {

bool is_heuristic_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_consonant(std::string_view p, std::size_t i) {
  if (i >= p.size()) return false;
  char c = p[i];
  return c >= 'a' && c <= 'z' && !is_heuristic_vowel(c);
}

// After these, a trailing "es" stays syllabic (prices, wages, houses).
bool is_sibilant(char c) {
  return c == 's' || c == 'z' || c == 'x' || c == 'c' || c == 'g' || c == 'h';
}

int count_part(std::string_view part) {
  std::string p;
  p.reserve(part.size());
  for (char c : part) {
    if (c != '\'') p += c;
  }
  if (p.empty()) return 0;

  int groups = 0;
  bool in_group = false;
  for (char c : p) {
    bool v = is_heuristic_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }

  const std::size_t n = p.size();
  auto ends_with = [&](std::string_view suffix) {
    return n >= suffix.size() &&
           p.compare(n - suffix.size(), suffix.size(), suffix) == 0;
  };

  // Terminal silent "e": "rate" loses its final group, "table" keeps it
  // (consonant+"le"), and the suffixed forms "rates" / "declined" lose it
  // too. "-es" stays syllabic after sibilants (prices), "-ed" after d/t
  // (expected), and vowel-led endings are untouched (agreed, issues).
  if (ends_with("e") && is_consonant(p, n - 2)) {
    if (!(p[n - 2] == 'l' && is_consonant(p, n - 3))) --groups;
  } else if (ends_with("es") && is_consonant(p, n - 3) &&
             !is_sibilant(p[n - 3])) {
    if (!(p[n - 3] == 'l' && is_consonant(p, n - 4))) --groups;
  } else if (ends_with("ed") && is_consonant(p, n - 3) && p[n - 3] != 'd' &&
             p[n - 3] != 't') {
    if (!(p[n - 3] == 'l' && is_consonant(p, n - 4))) --groups;
  }

  return std::max(groups, 1);
}

}  // namespace

int count_syllables(std::string_view word) {
  int total = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= word.size(); ++i) {
    if (i == word.size() || word[i] == '-') {
      total += count_part(word.substr(start, i - start));
      start = i + 1;
    }
  }
  return std::max(total, 1);
}

// ---------------------------------------------------------------------------
// Document pass
// ---------------------------------------------------------------------------

TokenizedDocument tokenize_document(const Document& doc,
                                    const TokenizerOptions& options) {
  TokenizedDocument tdoc;
  tdoc.doc_id = doc.id;
  tdoc.sentences = segment_sentences(doc.text, options);
  tdoc.words = tokenize_words(doc.text);
  if (tdoc.words.empty()) {
    raise(ErrorKind::EmptyDocument,
          "document '" + doc.id + "' has no word tokens");
  }
  tdoc.syllables.reserve(tdoc.words.size());
  std::size_t syllable_total = 0;
  for (const auto& word : tdoc.words) {
    int s = count_syllables(word);
    tdoc.syllables.push_back(s);
    syllable_total += std::size_t(s);
  }
  tdoc.total_words = tdoc.words.size();
  tdoc.total_sentences = tdoc.sentences.size();
  tdoc.total_syllables = syllable_total;
  return tdoc;
}

}  // namespace commlex
