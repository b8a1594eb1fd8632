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
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "commlex/csv.hpp"
#include "commlex/error.hpp"

namespace commlex {

namespace {

bool is_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

}  // namespace

Corpus make_corpus(std::vector<Document> documents) {
  for (const auto& doc : documents) {
    if (doc.id.empty()) {
      raise(ErrorKind::Parse, "document with empty id");
    }
    if (is_blank(doc.text)) {
      raise(ErrorKind::EmptyText, "document '" + doc.id + "' has empty text");
    }
  }
  std::sort(documents.begin(), documents.end(),
            [](const Document& a, const Document& b) {
              auto da = std::chrono::sys_days(a.date);
              auto db = std::chrono::sys_days(b.date);
              return da != db ? da < db : a.id < b.id;
            });
  std::unordered_set<std::string_view> seen;
  seen.reserve(documents.size());
  for (const auto& doc : documents) {
    if (!seen.insert(doc.id).second) {
      raise(ErrorKind::DuplicateId, "duplicate document id '" + doc.id + "'");
    }
  }
  Corpus corpus;
  corpus.documents = std::move(documents);
  return corpus;
}

namespace {

Corpus load_dir_of_txt(const std::filesystem::path& path,
                       std::string_view default_source) {
  std::vector<Document> docs;
  std::error_code ec;
  std::filesystem::directory_iterator it(path, ec);
  if (ec) {
    raise(ErrorKind::Io, "cannot open directory '" + path.string() + "'");
  }
  for (const auto& entry : it) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".txt") continue;
    std::string stem = entry.path().stem().string();
    std::string date_part = stem.substr(0, stem.find('_'));
    Document doc;
    try {
      doc.date = parse_date(date_part);
    } catch (const Error&) {
      raise(ErrorKind::MalformedDate,
            "file '" + entry.path().filename().string() +
                "': expected name YYYY-MM-DD[_suffix].txt");
    }
    doc.id = std::move(stem);
    doc.source = std::string(default_source);
    doc.text = read_file(entry.path());
    docs.push_back(std::move(doc));
  }
  return make_corpus(std::move(docs));
}

Corpus load_csv_corpus(const std::filesystem::path& path,
                       std::string_view default_source) {
  CsvTable table = read_csv(path);
  int date_col = table.column("date");
  int text_col = table.column("text");
  if (date_col < 0 || text_col < 0) {
    raise(ErrorKind::Parse,
          "'" + path.string() + "': header must contain date and text");
  }
  int id_col = table.column("id");
  int source_col = table.column("source");
  std::vector<Document> docs;
  docs.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Document doc;
    doc.date = parse_date(row[std::size_t(date_col)]);
    doc.text = row[std::size_t(text_col)];
    doc.id = id_col >= 0 ? row[std::size_t(id_col)]
                         : row[std::size_t(date_col)];
    doc.source = source_col >= 0 && !row[std::size_t(source_col)].empty()
                     ? row[std::size_t(source_col)]
                     : std::string(default_source);
    docs.push_back(std::move(doc));
  }
  return make_corpus(std::move(docs));
}

Corpus load_jsonl_corpus(const std::filesystem::path& path,
                         std::string_view default_source) {
  std::istringstream in(read_file(path));
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::Parse, path.string() + ":" + std::to_string(line_no) +
                                  ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("date") ||
        !obj.contains("text")) {
      raise(ErrorKind::Parse, path.string() + ":" + std::to_string(line_no) +
                                  ": need an object with id, date, text");
    }
    Document doc;
    try {
      doc.id = obj.at("id").get<std::string>();
      doc.text = obj.at("text").get<std::string>();
      doc.source = obj.value("source", std::string(default_source));
      doc.date = parse_date(obj.at("date").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::Parse, path.string() + ":" + std::to_string(line_no) +
                                  ": " + e.what());
    }
    docs.push_back(std::move(doc));
  }
  return make_corpus(std::move(docs));
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   std::string_view default_source) {
  if (!std::filesystem::exists(path)) {
    raise(ErrorKind::Io, "path '" + path.string() + "' does not exist");
  }
  switch (format) {
    case CorpusFormat::DirOfTxt:
      return load_dir_of_txt(path, default_source);
    case CorpusFormat::Csv:
      return load_csv_corpus(path, default_source);
    case CorpusFormat::Jsonl:
      return load_jsonl_corpus(path, default_source);
  }
  raise(ErrorKind::BadConfig, "unknown corpus format");
}

void save_corpus_jsonl(const Corpus& corpus,
                       const std::filesystem::path& path) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    nlohmann::ordered_json obj;
    obj["id"] = doc.id;
    obj["date"] = format_date(doc.date);
    obj["source"] = doc.source;
    obj["text"] = doc.text;
    out += obj.dump();
    out += '\n';
  }
  write_file(path, out);
}

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "dir") return CorpusFormat::DirOfTxt;
  if (name == "csv") return CorpusFormat::Csv;
  if (name == "jsonl") return CorpusFormat::Jsonl;
  raise(ErrorKind::BadConfig,
        "corpus format must be dir, csv, or jsonl (got '" + std::string(name) +
            "')");
}

CorpusFormat detect_corpus_format(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    raise(ErrorKind::Io, "path '" + path.string() + "' does not exist");
  }
  if (std::filesystem::is_directory(path)) return CorpusFormat::DirOfTxt;
  auto ext = path.extension();
  if (ext == ".csv") return CorpusFormat::Csv;
  if (ext == ".jsonl" || ext == ".ndjson") return CorpusFormat::Jsonl;
  raise(ErrorKind::BadConfig, "cannot infer corpus format of '" +
                                  path.string() + "'; pass --format");
}

}  // namespace commlex
