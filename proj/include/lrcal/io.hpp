// include/lrcal/io.hpp

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

// File formats shared by the command-line tools.
//
//   scores CSV   label,s1[,s2,...]      label is ss or ds
//   LLR CSV      label,llr_log10
//   pairs CSV    so_score,do_score[,group]
//   Tippett CSV  threshold_log10lr,so_ge_proportion,do_ge_proportion
//   model JSON   {"alpha", "betas", "log_base": "e",
//                 "trained_on": {"n_so", "n_do"}, "ridge_lambda"}
//
// Readers accept LF or CRLF line endings and skip blank lines. Parse errors
// throw InvalidInputError prefixed with "<source>:<line>:".

#ifndef LRCAL_IO_HPP_
#define LRCAL_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrcal/evaluation.hpp"
#include "lrcal/logreg.hpp"
#include "lrcal/scores.hpp"

namespace lrcal {

enum class Label { kSameSource, kDifferentSource };

std::string_view label_name(Label label);

/// Units of scores in an input file. Everything internal is natural log.
enum class LogBase { kE, kTen };

std::optional<LogBase> parse_log_base(std::string_view text);
/// Factor converting a value in `base` log units to natural-log units.
double to_natural_factor(LogBase base);

/// Labelled rows of one or more score columns, in file order.
struct ScoreTable {
  std::vector<std::string> columns;  // score column names, without "label"
  std::vector<Label> labels;
  std::vector<double> values;  // row-major, columns.size() per row

  std::size_t dim() const { return columns.size(); }
  std::size_t rows() const { return labels.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dim(), dim()};
  }
};

struct LlrTable {
  std::vector<Label> labels;
  std::vector<double> llr_log10;
};

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

/// Scores are multiplied by `scale` on ingest.
ScoreTable read_score_csv(std::istream &in, std::string_view source,
                          double scale = 1.0);
void write_score_csv(std::ostream &out, const ScoreTable &table);
ScoreTable make_score_table(const LabeledScores &scores);
ParallelScores to_parallel(const ScoreTable &table);

LlrTable read_llr_csv(std::istream &in, std::string_view source);
void write_llr_csv(std::ostream &out, const LlrTable &table);
/// Base-10 LLRs back to a natural-log LlrSet.
LlrSet to_llr_set(const LlrTable &table);

PairedScoreDb read_pairs_csv(std::istream &in, std::string_view source,
                             double scale = 1.0);
void write_pairs_csv(std::ostream &out, const PairedScoreDb &db);

void write_tippett_csv(std::ostream &out, const TippettCurve &curve);

std::string weights_to_json(const CalibrationWeights &weights);
CalibrationWeights weights_from_json(std::string_view text,
                                     std::string_view source);

/// Whole-file helpers; failures to open throw InvalidInputError.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace lrcal

#endif  // LRCAL_IO_HPP_
