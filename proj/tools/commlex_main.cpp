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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commlex/cli.hpp"
#include "commlex/error.hpp"

namespace {

// --corpus accepts "<label>=<path>" or a bare path (label "corpus").
commlex::CorpusSpec parse_corpus_spec(const std::string& arg) {
  std::size_t eq = arg.find('=');
  if (eq == std::string::npos) return {"corpus", arg};
  if (eq == 0 || eq + 1 == arg.size()) {
    commlex::raise(commlex::ErrorKind::BadConfig,
                   "--corpus expects <label>=<path>, got '" + arg + "'");
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

struct CommonArgs {
  std::vector<std::string> corpus_args;
  std::string format = "auto";
  std::string lexicon;
  std::string lexicon_name = "uncertainty";
  std::string market;
  std::size_t window = 100;
  std::string align = "last-on-or-before";
  int staleness_days = 7;
  bool diff = false;
  std::string out;
  std::string emit = "csv";
  std::size_t trend_k = 0;
  std::string abbrev;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--corpus", args.corpus_args,
                  "Corpus as <label>=<path> (repeatable)")
      ->required();
  cmd->add_option("--format", args.format,
                  "Corpus format: dir|csv|jsonl (default: detect per path)")
      ->check(CLI::IsMember({"auto", "dir", "csv", "jsonl"}));
  cmd->add_option("--lexicon", args.lexicon, "Word-category lexicon file");
  cmd->add_option("--lexicon-name", args.lexicon_name,
                  "Category name for the lexicon");
  cmd->add_option("--market", args.market, "Market series CSV (date,value)");
  cmd->add_option("--window", args.window, "MATTR window in words");
  cmd->add_option("--align", args.align,
                  "Alignment rule: same-day|last-on-or-before")
      ->check(CLI::IsMember({"same-day", "last-on-or-before"}));
  cmd->add_option("--staleness-days", args.staleness_days,
                  "Max market-quote age for last-on-or-before");
  cmd->add_flag("--diff", args.diff, "Correlate first differences");
  cmd->add_option("--out", args.out, "Output path (default stdout)");
  cmd->add_option("--emit", args.emit, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--trend-k", args.trend_k,
                  "Append moving-average trend columns (odd width)");
  cmd->add_option("--abbrev", args.abbrev,
                  "Abbreviation list (one per line)")
      ->envname("COMMLEX_ABBREV");
}

commlex::RunConfig to_config(const CommonArgs& args) {
  commlex::RunConfig config;
  for (const auto& arg : args.corpus_args) {
    config.corpora.push_back(parse_corpus_spec(arg));
  }
  if (args.format != "auto") {
    config.corpus_format = commlex::parse_corpus_format(args.format);
  }
  config.lexicon_path = args.lexicon;
  config.lexicon_name = args.lexicon_name;
  config.market_path = args.market;
  config.mattr_window = args.window;
  config.align.rule = commlex::parse_align_rule(args.align);
  if (args.staleness_days < 0) {
    commlex::raise(commlex::ErrorKind::BadConfig,
                   "--staleness-days must be >= 0");
  }
  config.align.max_staleness_days = args.staleness_days;
  config.differences = args.diff;
  config.out_path = args.out;
  config.emit = args.emit == "json" ? commlex::EmitFormat::Json
                                    : commlex::EmitFormat::Csv;
  config.trend_k = args.trend_k;
  config.abbrev_path = args.abbrev;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "commlex: communication-quality metrics over dated announcement "
      "corpora"};
  app.require_subcommand(1);

  CommonArgs analyze_args, correlate_args, compare_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Per-document metrics table");
  add_common_options(analyze, analyze_args);
  CLI::App* correlate = app.add_subcommand(
      "correlate", "Correlate the uncertainty series with a market series");
  add_common_options(correlate, correlate_args);
  CLI::App* compare =
      app.add_subcommand("compare", "Yearly per-source metric comparison");
  add_common_options(compare, compare_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error:bad-config: " << e.what() << "\n";
    return 1;
  }

  try {
    if (analyze->parsed()) {
      commlex::run_analyze(to_config(analyze_args), std::cout);
    } else if (correlate->parsed()) {
      commlex::run_correlate(to_config(correlate_args), std::cout);
    } else if (compare->parsed()) {
      commlex::run_compare(to_config(compare_args), std::cout);
    }
  } catch (const commlex::Error& e) {
    std::cerr << "error:" << commlex::error_kind_name(e.kind()) << ": "
              << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
