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

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "commlex/csv.hpp"
#include "commlex/error.hpp"
#include "commlex/lexicon.hpp"
#include "commlex/metrics.hpp"
#include "commlex/strfmt.hpp"
#include "commlex/textproc.hpp"

namespace commlex {

namespace {

TokenizerOptions tokenizer_options_for(const RunConfig& config) {
  TokenizerOptions options = TokenizerOptions::defaults();
  if (!config.abbrev_path.empty()) {
    options.abbreviations = load_abbreviations(config.abbrev_path);
  }
  return options;
}

struct AnalyzedCorpus {
  std::string label;
  std::vector<TokenizedDocument> tdocs;
  std::vector<MetricsRecord> records;
};

AnalyzedCorpus analyze_corpus(const CorpusSpec& spec, const RunConfig& config,
                              const TokenizerOptions& options) {
  AnalyzedCorpus out;
  out.label = spec.label;
  CorpusFormat format = config.corpus_format
                            ? *config.corpus_format
                            : detect_corpus_format(spec.path);
  Corpus corpus = load_corpus(spec.path, format, spec.label);
  out.tdocs.reserve(corpus.documents.size());
  out.records.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    TokenizedDocument tdoc = tokenize_document(doc, options);
    MetricsRecord rec = compute_metrics(tdoc, doc.date, config.mattr_window);
    out.tdocs.push_back(std::move(tdoc));
    out.records.push_back(std::move(rec));
  }
  return out;
}

void validate_common(const RunConfig& config) {
  if (config.corpora.empty()) {
    raise(ErrorKind::BadConfig, "at least one --corpus is required");
  }
  if (config.mattr_window < 1) {
    raise(ErrorKind::BadConfig, "--window must be >= 1");
  }
  if (config.trend_k != 0 && config.trend_k % 2 == 0) {
    raise(ErrorKind::BadConfig, "--trend-k must be odd");
  }
}

void write_output(const RunConfig& config, std::ostream& out,
                  const std::string& content) {
  if (config.out_path.empty()) {
    out << content;
  } else {
    write_file(config.out_path, content);
  }
}

// Metric columns eligible for --trend-k smoothing, in emission order.
constexpr const char* kTrendMetrics[] = {
    "ttr",       "mattr",          "flesch_re",
    "fk_grade",  "mean_sentence_length", "syllables_per_word",
    "uncertainty_rate",
};

double metric_value(const MetricsRecord& r, std::string_view name) {
  if (name == "ttr") return r.ttr;
  if (name == "mattr") return r.mattr;
  if (name == "flesch_re") return r.flesch_re;
  if (name == "fk_grade") return r.fk_grade;
  if (name == "mean_sentence_length") return r.mean_sentence_length;
  if (name == "syllables_per_word") return r.syllables_per_word;
  return r.uncertainty_rate;
}

// Mean-collapses same-date rows so the series dates are strictly increasing.
TimeSeries collapsed_series(const std::vector<Date>& dates,
                            const std::vector<double>& values) {
  std::vector<TimePoint> points;
  double run_sum = 0.0;
  std::size_t run_len = 0;
  for (std::size_t i = 0; i < dates.size(); ++i) {
    if (run_len > 0 && points.back().date == dates[i]) {
      run_sum += values[i];
      ++run_len;
      points.back().value = run_sum / double(run_len);
    } else {
      run_sum = values[i];
      run_len = 1;
      points.push_back({dates[i], values[i]});
    }
  }
  return make_series(std::move(points));
}

}  // namespace

void run_analyze(const RunConfig& config, std::ostream& out) {
  validate_common(config);
  TokenizerOptions options = tokenizer_options_for(config);
  std::optional<Lexicon> lex;
  if (!config.lexicon_path.empty()) {
    lex = load_lexicon(config.lexicon_path, config.lexicon_name);
  }

  struct Row {
    std::string source;
    MetricsRecord rec;
  };
  std::vector<Row> rows;
  for (const auto& spec : config.corpora) {
    AnalyzedCorpus ac = analyze_corpus(spec, config, options);
    for (std::size_t i = 0; i < ac.records.size(); ++i) {
      if (lex) {
        ac.records[i].uncertainty_rate =
            uncertainty_rate(ac.tdocs[i], *lex).rate;
      }
      rows.push_back({ac.label, std::move(ac.records[i])});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.source != b.source) return a.source < b.source;
    auto da = std::chrono::sys_days(a.rec.date);
    auto db = std::chrono::sys_days(b.rec.date);
    if (da != db) return da < db;
    return a.rec.doc_id < b.rec.doc_id;
  });

  // Optional plot-ready trend columns, smoothed per source group.
  std::vector<std::vector<double>> trends;  // indexed like kTrendMetrics
  if (config.trend_k > 0) {
    trends.assign(std::size(kTrendMetrics), std::vector<double>(rows.size()));
    std::size_t group_start = 0;
    while (group_start < rows.size()) {
      std::size_t group_end = group_start;
      while (group_end < rows.size() &&
             rows[group_end].source == rows[group_start].source) {
        ++group_end;
      }
      for (std::size_t m = 0; m < std::size(kTrendMetrics); ++m) {
        std::vector<double> column;
        column.reserve(group_end - group_start);
        for (std::size_t i = group_start; i < group_end; ++i) {
          column.push_back(metric_value(rows[i].rec, kTrendMetrics[m]));
        }
        std::vector<double> smooth =
            moving_average_values(column, config.trend_k);
        for (std::size_t i = group_start; i < group_end; ++i) {
          trends[m][i] = smooth[i - group_start];
        }
      }
      group_start = group_end;
    }
  }

  if (config.emit == EmitFormat::Csv) {
    std::string csv =
        "doc_id,date,word_count,sentence_count,syllable_count,ttr,mattr,"
        "mattr_window,flesch_re,fk_grade,mean_sentence_length,"
        "syllables_per_word,uncertainty_rate";
    if (config.trend_k > 0) {
      for (const char* m : kTrendMetrics) {
        csv += ',';
        csv += m;
        csv += "_trend";
      }
    }
    csv += '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const MetricsRecord& r = rows[i].rec;
      csv += csv_escape(r.doc_id);
      csv += ',' + format_date(r.date);
      csv += ',' + format_int(r.word_count);
      csv += ',' + format_int(r.sentence_count);
      csv += ',' + format_int(r.syllable_count);
      csv += ',' + format_double(r.ttr);
      csv += ',' + format_double(r.mattr);
      csv += ',' + format_int(r.mattr_window);
      csv += ',' + format_double(r.flesch_re);
      csv += ',' + format_double(r.fk_grade);
      csv += ',' + format_double(r.mean_sentence_length);
      csv += ',' + format_double(r.syllables_per_word);
      csv += ',' + format_double(r.uncertainty_rate);
      if (config.trend_k > 0) {
        for (std::size_t m = 0; m < std::size(kTrendMetrics); ++m) {
          csv += ',' + format_double(trends[m][i]);
        }
      }
      csv += '\n';
    }
    write_output(config, out, csv);
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const MetricsRecord& r = rows[i].rec;
      nlohmann::ordered_json obj;
      obj["doc_id"] = r.doc_id;
      obj["date"] = format_date(r.date);
      obj["word_count"] = r.word_count;
      obj["sentence_count"] = r.sentence_count;
      obj["syllable_count"] = r.syllable_count;
      obj["ttr"] = r.ttr;
      obj["mattr"] = r.mattr;
      obj["mattr_window"] = r.mattr_window;
      obj["flesch_re"] = r.flesch_re;
      obj["fk_grade"] = r.fk_grade;
      obj["mean_sentence_length"] = r.mean_sentence_length;
      obj["syllables_per_word"] = r.syllables_per_word;
      obj["uncertainty_rate"] = r.uncertainty_rate;
      if (config.trend_k > 0) {
        for (std::size_t m = 0; m < std::size(kTrendMetrics); ++m) {
          obj[std::string(kTrendMetrics[m]) + "_trend"] = trends[m][i];
        }
      }
      arr.push_back(std::move(obj));
    }
    write_output(config, out, arr.dump(2) + "\n");
  }
}

void run_correlate(const RunConfig& config, std::ostream& out) {
  validate_common(config);
  if (config.corpora.size() != 1) {
    raise(ErrorKind::BadConfig, "correlate expects exactly one --corpus");
  }
  if (config.lexicon_path.empty()) {
    raise(ErrorKind::BadConfig, "correlate requires --lexicon");
  }
  if (config.market_path.empty()) {
    raise(ErrorKind::BadConfig, "correlate requires --market");
  }
  TokenizerOptions options = tokenizer_options_for(config);
  Lexicon lex = load_lexicon(config.lexicon_path, config.lexicon_name);
  AnalyzedCorpus ac = analyze_corpus(config.corpora.front(), config, options);
  TimeSeries metric_series =
      uncertainty_series(ac.tdocs, ac.records, lex, true);
  TimeSeries market = load_series(config.market_path);

  AlignedPair aligned = align(metric_series, market, config.align);
  AlignedPair used =
      config.differences ? first_differences(aligned) : aligned;
  const char* mode = config.differences ? "diff" : "levels";

  std::optional<double> pearson_value;
  std::string pearson_error;
  try {
    pearson_value = pearson(used);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateInput) throw;
    pearson_error = error_kind_name(e.kind());
  }
  double dcor_value = dcor(used);

  std::string pairs_csv = "date,metric,market\n";
  for (std::size_t i = 0; i < used.size(); ++i) {
    pairs_csv += format_date(used.dates[i]);
    pairs_csv += ',' + format_double(used.x[i]);
    pairs_csv += ',' + format_double(used.y[i]);
    pairs_csv += '\n';
  }

  if (config.emit == EmitFormat::Csv) {
    std::string summary;
    summary += "n: " + format_int(std::int64_t(used.size())) + '\n';
    summary += "pearson: ";
    summary += pearson_value ? format_double(*pearson_value)
                             : "na:" + pearson_error;
    summary += '\n';
    summary += "dcor: " + format_double(dcor_value) + '\n';
    summary += "align: ";
    summary += align_rule_name(config.align.rule);
    summary += '\n';
    summary += "mode: ";
    summary += mode;
    summary += '\n';
    out << summary;
    if (config.out_path.empty()) {
      out << '\n' << pairs_csv;
    } else {
      write_file(config.out_path, pairs_csv);
    }
  } else {
    nlohmann::ordered_json obj;
    obj["n"] = used.size();
    if (pearson_value) {
      obj["pearson"] = *pearson_value;
    } else {
      obj["pearson"] = nullptr;
      obj["pearson_error"] = pearson_error;
    }
    obj["dcor"] = dcor_value;
    obj["align"] = std::string(align_rule_name(config.align.rule));
    obj["mode"] = mode;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < used.size(); ++i) {
      nlohmann::ordered_json p;
      p["date"] = format_date(used.dates[i]);
      p["metric"] = used.x[i];
      p["market"] = used.y[i];
      pairs.push_back(std::move(p));
    }
    obj["pairs"] = std::move(pairs);
    write_output(config, out, obj.dump(2) + "\n");
  }
}

void run_compare(const RunConfig& config, std::ostream& out) {
  validate_common(config);
  if (config.corpora.size() < 2) {
    raise(ErrorKind::BadConfig, "compare requires at least two --corpus");
  }
  TokenizerOptions options = tokenizer_options_for(config);

  struct Row {
    std::string source;
    int year;
    const char* metric;
    double value;
  };
  std::vector<Row> rows;
  for (const auto& spec : config.corpora) {
    AnalyzedCorpus ac = analyze_corpus(spec, config, options);
    std::vector<Date> dates;
    std::vector<double> fk, mat;
    dates.reserve(ac.records.size());
    for (const auto& rec : ac.records) {
      dates.push_back(rec.date);
      fk.push_back(rec.fk_grade);
      mat.push_back(rec.mattr);
    }
    TimeSeries fk_yearly = yearly_mean(collapsed_series(dates, fk));
    TimeSeries mattr_yearly = yearly_mean(collapsed_series(dates, mat));
    for (const auto& p : fk_yearly.points) {
      rows.push_back({ac.label, date_year(p.date), "fk_grade", p.value});
    }
    for (const auto& p : mattr_yearly.points) {
      rows.push_back({ac.label, date_year(p.date), "mattr", p.value});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.year != b.year) return a.year < b.year;
    return std::string_view(a.metric) < std::string_view(b.metric);
  });

  if (config.emit == EmitFormat::Csv) {
    std::string csv = "source,year,metric,value\n";
    for (const auto& row : rows) {
      csv += csv_escape(row.source);
      csv += ',' + format_int(row.year);
      csv += ',';
      csv += row.metric;
      csv += ',' + format_double(row.value);
      csv += '\n';
    }
    write_output(config, out, csv);
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      obj["source"] = row.source;
      obj["year"] = row.year;
      obj["metric"] = row.metric;
      obj["value"] = row.value;
      arr.push_back(std::move(obj));
    }
    write_output(config, out, arr.dump(2) + "\n");
  }
}

}  // namespace commlex
