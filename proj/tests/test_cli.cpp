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

#include "commlex/cli.hpp"

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "commlex/csv.hpp"
#include "commlex/error.hpp"

using namespace commlex;

namespace {

const std::filesystem::path kTestsDir = COMMLEX_TESTS_DIR;
const std::filesystem::path kFixtures = kTestsDir / "fixtures";

RunConfig fixture_config() {
  RunConfig config;
  config.corpora = {{"BoI", (kFixtures / "boi").string()}};
  config.lexicon_path = (kFixtures / "lexicon.txt").string();
  config.market_path = (kFixtures / "market.csv").string();
  return config;
}

std::string run_to_string(void (*cmd)(const RunConfig&, std::ostream&),
                          const RunConfig& config) {
  std::ostringstream out;
  cmd(config, out);
  return std::move(out).str();
}

}  // namespace

TEST_CASE("analyze emits one 13-column row per document") {
  std::string csv = run_to_string(run_analyze, fixture_config());
  CsvTable table = parse_csv(csv);
  REQUIRE(table.header.size() == 13);
  CHECK(table.header.front() == "doc_id");
  CHECK(table.header.back() == "uncertainty_rate");
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows[0][0] == "2017-01-23");
  CHECK(table.rows[4][0] == "2017-07-10");
  // fixture rates, cross-checked by hand (see fixtures/HAND_CHECK.md)
  CHECK(table.rows[0][12] == "13.333333333333334");
  CHECK(table.rows[1][12] == "0");
  CHECK(table.rows[3][12] == "12.5");
}

TEST_CASE("analyze output is byte-stable across runs") {
  std::string a = run_to_string(run_analyze, fixture_config());
  std::string b = run_to_string(run_analyze, fixture_config());
  CHECK(a == b);
}

TEST_CASE("analyze without a lexicon leaves rates at zero") {
  RunConfig config = fixture_config();
  config.lexicon_path.clear();
  CsvTable table = parse_csv(run_to_string(run_analyze, config));
  for (const auto& row : table.rows) CHECK(row[12] == "0");
}

TEST_CASE("analyze respects the mattr window") {
  RunConfig config = fixture_config();
  config.mattr_window = 10;
  CsvTable table = parse_csv(run_to_string(run_analyze, config));
  int ttr_col = table.column("ttr");
  int mattr_col = table.column("mattr");
  int window_col = table.column("mattr_window");
  REQUIRE(ttr_col >= 0);
  for (const auto& row : table.rows) {
    CHECK(row[std::size_t(window_col)] == "10");
    // 30+ word fixtures: windowed mean differs from plain ttr
    CHECK(row[std::size_t(mattr_col)] != row[std::size_t(ttr_col)]);
  }
}

TEST_CASE("analyze emits trend columns when asked") {
  RunConfig config = fixture_config();
  config.trend_k = 3;
  CsvTable table = parse_csv(run_to_string(run_analyze, config));
  REQUIRE(table.header.size() == 20);
  CHECK(table.header[13] == "ttr_trend");
  CHECK(table.header[19] == "uncertainty_rate_trend");
  // middle row of the smoothed uncertainty column: mean of rows 2..4
  int rate_col = table.column("uncertainty_rate");
  int trend_col = table.column("uncertainty_rate_trend");
  double r2 = std::stod(table.rows[1][std::size_t(rate_col)]);
  double r3 = std::stod(table.rows[2][std::size_t(rate_col)]);
  double r4 = std::stod(table.rows[3][std::size_t(rate_col)]);
  double t3 = std::stod(table.rows[2][std::size_t(trend_col)]);
  CHECK(t3 == doctest::Approx((r2 + r3 + r4) / 3.0).epsilon(1e-12));
}

TEST_CASE("analyze json mirrors the csv table") {
  RunConfig config = fixture_config();
  config.emit = EmitFormat::Json;
  auto parsed = nlohmann::json::parse(run_to_string(run_analyze, config));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 5);
  CHECK(parsed[0]["doc_id"] == "2017-01-23");
  CHECK(parsed[0]["word_count"] == 45);
  CHECK(parsed[0]["uncertainty_rate"].get<double>() ==
        doctest::Approx(13.333333333333334).epsilon(1e-12));
}

TEST_CASE("analyze fails naming an empty document") {
  auto dir = std::filesystem::temp_directory_path() / "commlex_cli_empty";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream ok(dir / "2017-01-23.txt");
    ok << "Normal words here.";
    std::ofstream bad(dir / "2017-02-27.txt");
    bad << "... 42 ...";  // tokenizes to nothing
  }
  RunConfig config;
  config.corpora = {{"X", dir.string()}};
  try {
    run_to_string(run_analyze, config);
    FAIL("expected empty-document");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyDocument);
    CHECK(std::string(e.what()).find("2017-02-27") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("correlate matches the hand computation") {
  std::string out = run_to_string(run_correlate, fixture_config());
  CHECK(out.find("n: 4\n") != std::string::npos);
  CHECK(out.find("pearson: 0.834335638685982\n") != std::string::npos);
  CHECK(out.find("dcor: 0.8477113938048892\n") != std::string::npos);
  CHECK(out.find("align: last-on-or-before\n") != std::string::npos);
  CHECK(out.find("mode: levels\n") != std::string::npos);
  // aligned pairs appended when no --out path is set
  CHECK(out.find("date,metric,market\n") != std::string::npos);
  CHECK(out.find("2017-04-06") == std::string::npos);  // dropped: stale quote
}

TEST_CASE("correlate in differences mode") {
  RunConfig config = fixture_config();
  config.differences = true;
  std::string out = run_to_string(run_correlate, config);
  CHECK(out.find("n: 3\n") != std::string::npos);
  CHECK(out.find("mode: diff\n") != std::string::npos);
  CHECK(out.find("pearson: 0.7487145718180429\n") != std::string::npos);
  CHECK(out.find("dcor: 0.9231777237879195\n") != std::string::npos);
}

TEST_CASE("correlate under same-day alignment") {
  RunConfig config = fixture_config();
  config.align.rule = AlignRule::SameDay;
  std::string out = run_to_string(run_correlate, config);
  CHECK(out.find("n: 2\n") != std::string::npos);
  CHECK(out.find("align: same-day\n") != std::string::npos);
}

TEST_CASE("correlate reports dcor 0 when the market is constant") {
  auto path = std::filesystem::temp_directory_path() / "commlex_flat.csv";
  {
    std::ofstream out(path);
    out << "date,value\n2017-01-23,5.0\n2017-02-26,5.0\n2017-05-25,5.0\n"
           "2017-07-10,5.0\n";
  }
  RunConfig config = fixture_config();
  config.market_path = path.string();
  std::string out = run_to_string(run_correlate, config);
  CHECK(out.find("pearson: na:degenerate-input\n") != std::string::npos);
  CHECK(out.find("dcor: 0\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("correlate writes the pairs file when out_path is set") {
  auto path = std::filesystem::temp_directory_path() / "commlex_pairs.csv";
  RunConfig config = fixture_config();
  config.out_path = path.string();
  std::string summary = run_to_string(run_correlate, config);
  CHECK(summary.find("date,metric,market") == std::string::npos);
  CsvTable pairs = parse_csv(read_file(path));
  REQUIRE(pairs.rows.size() == 4);
  CHECK(pairs.rows[0][0] == "2017-01-23");
  CHECK(pairs.rows[0][2] == "14.2");
  std::filesystem::remove(path);
}

TEST_CASE("correlate json emit carries the summary and pairs") {
  RunConfig config = fixture_config();
  config.emit = EmitFormat::Json;
  auto parsed = nlohmann::json::parse(run_to_string(run_correlate, config));
  CHECK(parsed["n"] == 4);
  CHECK(parsed["pearson"].get<double>() ==
        doctest::Approx(0.834335638685982).epsilon(1e-12));
  CHECK(parsed["dcor"].get<double>() ==
        doctest::Approx(0.8477113938048892).epsilon(1e-12));
  CHECK(parsed["mode"] == "levels");
  REQUIRE(parsed["pairs"].size() == 4);
  CHECK(parsed["pairs"][0]["date"] == "2017-01-23");
}

TEST_CASE("correlate config validation") {
  RunConfig no_lexicon = fixture_config();
  no_lexicon.lexicon_path.clear();
  CHECK_THROWS_AS(run_to_string(run_correlate, no_lexicon), Error);

  RunConfig zero_window = fixture_config();
  zero_window.mattr_window = 0;
  CHECK_THROWS_AS(run_to_string(run_correlate, zero_window), Error);

  RunConfig even_trend = fixture_config();
  even_trend.trend_k = 4;
  CHECK_THROWS_AS(run_to_string(run_analyze, even_trend), Error);

  RunConfig no_market = fixture_config();
  no_market.market_path.clear();
  CHECK_THROWS_AS(run_to_string(run_correlate, no_market), Error);

  RunConfig two = fixture_config();
  two.corpora.push_back({"Fed", (kFixtures / "fed.csv").string()});
  CHECK_THROWS_AS(run_to_string(run_correlate, two), Error);
}

TEST_CASE("compare emits a long-format yearly table") {
  RunConfig config = fixture_config();
  config.corpora = {{"BoI", (kFixtures / "boi").string()},
                    {"Fed", (kFixtures / "fed.csv").string()}};
  CsvTable table = parse_csv(run_to_string(run_compare, config));
  REQUIRE(table.header ==
          std::vector<std::string>{"source", "year", "metric", "value"});
  // BoI: 2017 x {fk_grade, mattr}; Fed: 2016, 2017 x {fk_grade, mattr}
  REQUIRE(table.rows.size() == 6);
  CHECK(table.rows[0][0] == "BoI");
  CHECK(table.rows[0][1] == "2017");
  CHECK(table.rows[0][2] == "fk_grade");
  CHECK(table.rows[1][2] == "mattr");
  CHECK(table.rows[2][0] == "Fed");
  CHECK(table.rows[2][1] == "2016");
  // long Fed sentences read harder than the BoI fixtures
  double boi_fk = std::stod(table.rows[0][3]);
  double fed_fk = std::stod(table.rows[4][3]);
  CHECK(fed_fk > boi_fk);
}

TEST_CASE("compare needs two corpora, identical corpora give equal values") {
  RunConfig config = fixture_config();
  CHECK_THROWS_AS(run_to_string(run_compare, config), Error);

  config.corpora = {{"A", (kFixtures / "boi").string()},
                    {"B", (kFixtures / "boi").string()}};
  CsvTable table = parse_csv(run_to_string(run_compare, config));
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0][3] == table.rows[2][3]);  // fk_grade A == B
  CHECK(table.rows[1][3] == table.rows[3][3]);  // mattr A == B
}

TEST_CASE("cli process prints error:<kind>: and exits nonzero") {
  auto tmp = std::filesystem::temp_directory_path();
  auto err_file = tmp / "commlex_stderr.txt";
  std::string cmd = std::string("\"") + COMMLEX_CLI_PATH +
                    "\" analyze --corpus X=/nonexistent/commlex-dir 2> \"" +
                    err_file.string() + "\"";
  int rc = std::system(cmd.c_str());
  CHECK(rc != 0);
  std::string err = read_file(err_file);
  CHECK(err.rfind("error:io:", 0) == 0);
  CHECK(std::count(err.begin(), err.end(), '\n') == 1);  // single line

  cmd = std::string("\"") + COMMLEX_CLI_PATH + "\" correlate --corpus X=" +
        (kFixtures / "boi").string() + " 2> \"" + err_file.string() + "\"";
  rc = std::system(cmd.c_str());
  CHECK(rc != 0);
  CHECK(read_file(err_file).rfind("error:bad-config:", 0) == 0);
  std::filesystem::remove(err_file);
}

TEST_CASE("abbreviation override changes segmentation") {
  auto path = std::filesystem::temp_directory_path() / "commlex_abbrev2.txt";
  {
    std::ofstream out(path);
    out << "ca\n";  // no Fig entry: "Fig. 2" now splits
  }
  RunConfig config = fixture_config();
  config.abbrev_path = path.string();
  CsvTable with_override = parse_csv(run_to_string(run_analyze, config));
  CsvTable defaults = parse_csv(run_to_string(run_analyze, fixture_config()));
  int col = defaults.column("sentence_count");
  // 2017-04-06 contains "Fig. 2"
  CHECK(std::stoi(with_override.rows[2][std::size_t(col)]) ==
        std::stoi(defaults.rows[2][std::size_t(col)]) + 1);
  std::filesystem::remove(path);
}
