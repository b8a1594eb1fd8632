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

#ifndef COMMLEX_CSV_HPP_
#define COMMLEX_CSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace commlex {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column, or -1.
  int column(std::string_view name) const;
};

// RFC-4180: quoted fields may contain commas, doubled quotes, and newlines;
// CRLF and a trailing newline are tolerated.
CsvTable parse_csv(std::string_view content);
CsvTable read_csv(const std::filesystem::path& path);

// Quotes a field only when it needs it (comma, quote, CR or LF).
std::string csv_escape(std::string_view field);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace commlex

#endif  // COMMLEX_CSV_HPP_
