// src/io.cpp

// Copyright 2026  The lrcal Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "lrcal/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lrcal/error.hpp"
#include "lrcal/numeric.hpp"

namespace lrcal {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

// Iterates non-blank lines with 1-based line numbers.
class LineReader {
 public:
  LineReader(std::istream &in, std::string_view source)
      : in_(in), source_(source) {}

  bool next(std::string &line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!trim(line).empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &message) const {
    throw InvalidInputError(std::string(source_) + ":" +
                            std::to_string(number_) + ": " + message);
  }

 private:
  std::istream &in_;
  std::string_view source_;
  std::size_t number_ = 0;
};

double parse_number(std::string_view field, const LineReader &reader) {
  std::string_view text = field;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    reader.fail("cannot parse number '" + std::string(field) + "'");
  if (!std::isfinite(value))
    reader.fail("non-finite number '" + std::string(field) + "'");
  return value;
}

Label parse_label(std::string_view field, const LineReader &reader) {
  if (field == "ss") return Label::kSameSource;
  if (field == "ds") return Label::kDifferentSource;
  reader.fail("label must be 'ss' or 'ds', got '" + std::string(field) + "'");
}

void expect_header(std::vector<std::string_view> got,
                   std::initializer_list<std::string_view> want,
                   const LineReader &reader) {
  bool ok = got.size() == want.size();
  for (std::size_t i = 0; ok && i < got.size(); ++i)
    ok = got[i] == *(want.begin() + i);
  if (!ok) {
    std::string expected;
    for (auto w : want) expected += (expected.empty() ? "" : ",") + std::string(w);
    reader.fail("expected header '" + expected + "'");
  }
}

}  // namespace

std::string_view label_name(Label label) {
  return label == Label::kSameSource ? "ss" : "ds";
}

std::optional<LogBase> parse_log_base(std::string_view text) {
  if (text == "e") return LogBase::kE;
  if (text == "10") return LogBase::kTen;
  return std::nullopt;
}

double to_natural_factor(LogBase base) {
  return base == LogBase::kTen ? kLn10 : 1.0;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw InvalidInputError("cannot format number");
  return std::string(buf, end);
}

ScoreTable read_score_csv(std::istream &in, std::string_view source,
                          double scale) {
  LineReader reader(in, source);
  std::string line;
  if (!reader.next(line)) reader.fail("missing header 'label,s1[,s2,...]'");
  const auto header = split_fields(line);
  if (header.size() < 2 || header[0] != "label")
    reader.fail("expected header 'label,s1[,s2,...]'");

  ScoreTable table;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty()) reader.fail("empty score column name");
    table.columns.emplace_back(header[i]);
  }
  while (reader.next(line)) {
    const auto fields = split_fields(line);
    if (fields.size() != header.size())
      reader.fail("expected " + std::to_string(header.size()) +
                  " fields, got " + std::to_string(fields.size()));
    table.labels.push_back(parse_label(fields[0], reader));
    for (std::size_t i = 1; i < fields.size(); ++i)
      table.values.push_back(parse_number(fields[i], reader) * scale);
  }
  return table;
}

void write_score_csv(std::ostream &out, const ScoreTable &table) {
  out << "label";
  for (const auto &c : table.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    out << label_name(table.labels[i]);
    for (double v : table.row(i)) out << ',' << format_number(v);
    out << '\n';
  }
}

ScoreTable make_score_table(const LabeledScores &scores) {
  ScoreTable table;
  table.columns = {"s1"};
  for (double s : scores.same_origin) {
    table.labels.push_back(Label::kSameSource);
    table.values.push_back(s);
  }
  for (double s : scores.different_origin) {
    table.labels.push_back(Label::kDifferentSource);
    table.values.push_back(s);
  }
  return table;
}

ParallelScores to_parallel(const ScoreTable &table) {
  ParallelScores out(table.dim());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (table.labels[i] == Label::kSameSource)
      out.add_same_origin(table.row(i));
    else
      out.add_different_origin(table.row(i));
  }
  return out;
}

LlrTable read_llr_csv(std::istream &in, std::string_view source) {
  LineReader reader(in, source);
  std::string line;
  if (!reader.next(line)) reader.fail("missing header 'label,llr_log10'");
  expect_header(split_fields(line), {"label", "llr_log10"}, reader);
  LlrTable table;
  while (reader.next(line)) {
    const auto fields = split_fields(line);
    if (fields.size() != 2)
      reader.fail("expected 2 fields, got " + std::to_string(fields.size()));
    table.labels.push_back(parse_label(fields[0], reader));
    table.llr_log10.push_back(parse_number(fields[1], reader));
  }
  return table;
}

void write_llr_csv(std::ostream &out, const LlrTable &table) {
  out << "label,llr_log10\n";
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    out << label_name(table.labels[i]) << ','
        << format_number(table.llr_log10[i]) << '\n';
}

LlrSet to_llr_set(const LlrTable &table) {
  LlrSet set;
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    const double llr = table.llr_log10[i] * kLn10;
    if (table.labels[i] == Label::kSameSource)
      set.same_origin.push_back(llr);
    else
      set.different_origin.push_back(llr);
  }
  return set;
}

PairedScoreDb read_pairs_csv(std::istream &in, std::string_view source,
                             double scale) {
  LineReader reader(in, source);
  std::string line;
  if (!reader.next(line))
    reader.fail("missing header 'so_score,do_score[,group]'");
  const auto header = split_fields(line);
  const bool grouped = header.size() == 3;
  if (grouped)
    expect_header(header, {"so_score", "do_score", "group"}, reader);
  else
    expect_header(header, {"so_score", "do_score"}, reader);

  PairedScoreDb db;
  while (reader.next(line)) {
    const auto fields = split_fields(line);
    if (fields.size() != header.size())
      reader.fail("expected " + std::to_string(header.size()) +
                  " fields, got " + std::to_string(fields.size()));
    ScorePair pair{parse_number(fields[0], reader) * scale,
                   parse_number(fields[1], reader) * scale, std::nullopt};
    if (grouped) {
      if (fields[2].empty()) reader.fail("empty group id");
      pair.group = std::string(fields[2]);
    }
    db.pairs.push_back(std::move(pair));
  }
  return db;
}

void write_pairs_csv(std::ostream &out, const PairedScoreDb &db) {
  const bool grouped = !db.pairs.empty() && db.pairs.front().group.has_value();
  out << (grouped ? "so_score,do_score,group\n" : "so_score,do_score\n");
  for (const auto &p : db.pairs) {
    out << format_number(p.so_score) << ',' << format_number(p.do_score);
    if (grouped) out << ',' << p.group.value_or("");
    out << '\n';
  }
}

void write_tippett_csv(std::ostream &out, const TippettCurve &curve) {
  out << "threshold_log10lr,so_ge_proportion,do_ge_proportion\n";
  for (const auto &p : curve.points)
    out << format_number(p.threshold_log10) << ','
        << format_number(p.so_proportion) << ','
        << format_number(p.do_proportion) << '\n';
}

std::string weights_to_json(const CalibrationWeights &weights) {
  Json doc;
  doc["alpha"] = weights.alpha;
  doc["betas"] = weights.betas;
  doc["log_base"] = "e";
  doc["trained_on"] = {{"n_so", weights.provenance.n_so},
                       {"n_do", weights.provenance.n_do}};
  doc["ridge_lambda"] = weights.provenance.ridge_lambda;
  return doc.dump(2) + "\n";
}

CalibrationWeights weights_from_json(std::string_view text,
                                     std::string_view source) {
  const std::string where(source);
  auto fail = [&](const std::string &message) -> void {
    throw InvalidInputError(where + ": " + message);
  };
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception &e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("model must be a JSON object");
  if (!doc.contains("alpha") || !doc["alpha"].is_number())
    fail("missing numeric 'alpha'");
  if (!doc.contains("betas") || !doc["betas"].is_array() ||
      doc["betas"].empty())
    fail("missing non-empty array 'betas'");
  if (!doc.contains("log_base") || doc["log_base"] != "e")
    fail("'log_base' must be \"e\"");

  CalibrationWeights w;
  w.alpha = doc["alpha"].get<double>();
  for (const auto &b : doc["betas"]) {
    if (!b.is_number()) fail("'betas' must contain numbers");
    w.betas.push_back(b.get<double>());
  }
  if (!std::isfinite(w.alpha)) fail("'alpha' must be finite");
  for (double b : w.betas)
    if (!std::isfinite(b)) fail("'betas' must be finite");

  if (doc.contains("trained_on")) {
    const auto &t = doc["trained_on"];
    if (!t.is_object() || !t.contains("n_so") || !t.contains("n_do") ||
        !t["n_so"].is_number_unsigned() || !t["n_do"].is_number_unsigned())
      fail("'trained_on' must hold non-negative integers n_so and n_do");
    w.provenance.n_so = t["n_so"].get<std::size_t>();
    w.provenance.n_do = t["n_do"].get<std::size_t>();
  }
  if (doc.contains("ridge_lambda")) {
    if (!doc["ridge_lambda"].is_number()) fail("'ridge_lambda' must be numeric");
    w.provenance.ridge_lambda = doc["ridge_lambda"].get<double>();
  }
  return w;
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInputError("failed writing " + path.string());
}

}  // namespace lrcal
