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

#include "commlex/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <doctest.h>

#include "commlex/csv.hpp"
#include "commlex/error.hpp"
#include "commlex/timeseries.hpp"

using namespace commlex;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const char* name) {
    path = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  void add(const std::string& filename, const std::string& content) const {
    std::ofstream out(path / filename, std::ios::binary);
    out << content;
  }
};

bool same_documents(const Corpus& a, const Corpus& b) {
  if (a.documents.size() != b.documents.size()) return false;
  for (std::size_t i = 0; i < a.documents.size(); ++i) {
    const Document& x = a.documents[i];
    const Document& y = b.documents[i];
    if (x.id != y.id || x.date != y.date || x.source != y.source ||
        x.text != y.text) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dir-of-txt corpus loads in date order") {
  TempDir dir("commlex_dir1");
  dir.add("2017-02-27.txt", "Second message.");
  dir.add("2017-01-23.txt", "First message.");
  dir.add("README.md", "not a corpus file");
  Corpus corpus = load_corpus(dir.path, CorpusFormat::DirOfTxt, "BoI");
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].id == "2017-01-23");
  CHECK(corpus.documents[1].id == "2017-02-27");
  CHECK(corpus.documents[0].source == "BoI");
}

TEST_CASE("same-day suffix files are distinct documents") {
  TempDir dir("commlex_dir2");
  dir.add("2017-01-23.txt", "Scheduled decision.");
  dir.add("2017-01-23_b.txt", "Press briefing.");
  Corpus corpus = load_corpus(dir.path, CorpusFormat::DirOfTxt, "BoI");
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].id == "2017-01-23");
  CHECK(corpus.documents[1].id == "2017-01-23_b");
}

TEST_CASE("a txt file without a date is a malformed-date error") {
  TempDir dir("commlex_dir3");
  dir.add("2017-01-23.txt", "Fine.");
  dir.add("notes.txt", "Stray file.");
  try {
    load_corpus(dir.path, CorpusFormat::DirOfTxt, "");
    FAIL("expected malformed-date");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedDate);
    CHECK(std::string(e.what()).find("notes.txt") != std::string::npos);
  }
}

TEST_CASE("empty text and duplicate ids are errors") {
  TempDir dir("commlex_dir4");
  dir.add("2017-01-23.txt", "  \n \t ");
  CHECK_THROWS_AS(load_corpus(dir.path, CorpusFormat::DirOfTxt, ""), Error);

  std::vector<Document> docs{
      {"a", parse_date("2017-01-23"), "", "text"},
      {"a", parse_date("2017-02-27"), "", "more"},
  };
  try {
    make_corpus(std::move(docs));
    FAIL("expected duplicate-id");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateId);
  }
}

TEST_CASE("csv corpus with quoting") {
  TempDir dir("commlex_csv1");
  dir.add("corpus.csv",
          "date,text\n"
          "2017-01-23,\"Rates, as expected, held.\nSecond line.\"\n"
          "2017-02-27,Simple text.\n"
          "2017-03-06,\"Quoted \"\"words\"\" kept.\"\n");
  Corpus corpus = load_corpus(dir.path / "corpus.csv", CorpusFormat::Csv, "X");
  REQUIRE(corpus.documents.size() == 3);
  CHECK(corpus.documents[0].text == "Rates, as expected, held.\nSecond line.");
  CHECK(corpus.documents[0].id == "2017-01-23");
  CHECK(corpus.documents[2].text == "Quoted \"words\" kept.");
}

TEST_CASE("csv corpus honors id and source columns") {
  TempDir dir("commlex_csv2");
  dir.add("corpus.csv",
          "date,text,id,source\n"
          "2016-03-16,Text one.,fomc-1,Fed\n"
          "2016-09-21,Text two.,fomc-2,\n");
  Corpus corpus =
      load_corpus(dir.path / "corpus.csv", CorpusFormat::Csv, "Default");
  CHECK(corpus.documents[0].id == "fomc-1");
  CHECK(corpus.documents[0].source == "Fed");
  CHECK(corpus.documents[1].source == "Default");
}

TEST_CASE("jsonl round trip preserves every field") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> day(1, 28);
  std::uniform_int_distribution<int> month(1, 12);
  std::uniform_int_distribution<int> pick(0, 4);
  const std::string snippets[] = {
      "Plain text.",
      "Commas, \"quotes\" and\nnewlines.",
      "Unicode: caf\xC3\xA9 \xE2\x80\x99 quote.",
      "Tabs\tand  spaces.",
      "Rates rose 0.5 percent; see Fig. 2.",
  };
  std::vector<Document> docs;
  for (int i = 0; i < 12; ++i) {
    char date[16];
    std::snprintf(date, sizeof(date), "2015-%02d-%02d", month(rng), day(rng));
    docs.push_back({"doc-" + std::to_string(i), parse_date(date), "SRC",
                    snippets[pick(rng)]});
  }
  Corpus corpus = make_corpus(std::move(docs));

  auto path = std::filesystem::temp_directory_path() / "commlex_rt.jsonl";
  save_corpus_jsonl(corpus, path);
  Corpus reloaded = load_corpus(path, CorpusFormat::Jsonl, "ignored");
  CHECK(same_documents(corpus, reloaded));
  std::filesystem::remove(path);
}

TEST_CASE("corpus order does not depend on input order") {
  std::vector<Document> docs{
      {"b", parse_date("2017-01-23"), "", "text b"},
      {"a", parse_date("2017-01-23"), "", "text a"},
      {"c", parse_date("2016-06-01"), "", "text c"},
  };
  auto shuffled = docs;
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Corpus corpus = make_corpus(shuffled);
    CHECK(corpus.documents[0].id == "c");
    CHECK(corpus.documents[1].id == "a");  // same-day tie broken by id
    CHECK(corpus.documents[2].id == "b");
  }
}

TEST_CASE("market series loads and validates") {
  TempDir dir("commlex_series1");
  dir.add("ok.csv", "date,value\n2017-01-02,12.5\n2017-01-03,13.1\n");
  TimeSeries series = load_series(dir.path / "ok.csv");
  REQUIRE(series.size() == 2);
  CHECK(series.points[0].value == 12.5);

  dir.add("order.csv", "date,value\n2017-01-03,1\n2017-01-02,2\n");
  try {
    load_series(dir.path / "order.csv");
    FAIL("expected date-order");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DateOrder);
  }

  dir.add("dup.csv", "date,value\n2017-01-02,1\n2017-01-02,2\n");
  try {
    load_series(dir.path / "dup.csv");
    FAIL("expected duplicate-date");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateDate);
  }

  dir.add("nan.csv", "date,value\n2017-01-02,NaN\n2017-01-03,1\n");
  try {
    load_series(dir.path / "nan.csv");
    FAIL("expected non-finite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteValue);
  }

  dir.add("bad.csv", "date,value\n2017-01-02,abc\n");
  CHECK_THROWS_AS(load_series(dir.path / "bad.csv"), Error);
}

TEST_CASE("date parsing is strict") {
  CHECK(format_date(parse_date("2017-01-23")) == "2017-01-23");
  CHECK_THROWS_AS(parse_date("2017-02-30"), Error);
  CHECK_THROWS_AS(parse_date("2017/01/23"), Error);
  CHECK_THROWS_AS(parse_date("17-01-23"), Error);
  CHECK_THROWS_AS(parse_date("not-a-date"), Error);
  // leap-day edge
  CHECK(format_date(parse_date("2016-02-29")) == "2016-02-29");
  CHECK_THROWS_AS(parse_date("2017-02-29"), Error);
}

TEST_CASE("missing path is an io error") {
  try {
    load_corpus("/nonexistent/commlex", CorpusFormat::DirOfTxt, "");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}

TEST_CASE("format detection by path") {
  TempDir dir("commlex_fmt1");
  dir.add("c.csv", "date,text\n2017-01-23,Hello there.\n");
  dir.add("c.jsonl", "{\"id\":\"a\",\"date\":\"2017-01-23\",\"text\":\"Hi.\"}\n");
  CHECK(detect_corpus_format(dir.path) == CorpusFormat::DirOfTxt);
  CHECK(detect_corpus_format(dir.path / "c.csv") == CorpusFormat::Csv);
  CHECK(detect_corpus_format(dir.path / "c.jsonl") == CorpusFormat::Jsonl);
  CHECK_THROWS_AS(detect_corpus_format(dir.path / "c.unknown"), Error);
}
