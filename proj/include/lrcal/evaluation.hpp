// include/lrcal/evaluation.hpp

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

// Validity metrics for a likelihood-ratio system: the log-likelihood-ratio
// cost, Tippett curves, and leave-one-pair-out cross-validated calibration.

#ifndef LRCAL_EVALUATION_HPP_
#define LRCAL_EVALUATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrcal/logreg.hpp"

namespace lrcal {

inline constexpr int kDefaultTippettThresholds = 201;

/// Natural-log LRs from test comparisons of known ground truth.
struct LlrSet {
  std::vector<double> same_origin;
  std::vector<double> different_origin;
};

struct TippettPoint {
  double threshold_log10;
  double so_proportion;  // fraction of same-origin log10 LRs >= threshold
  double do_proportion;  // fraction of different-origin log10 LRs >= threshold
};

struct TippettCurve {
  std::vector<TippettPoint> points;
};

/// Cllr = 1/2 [ mean_so log2(1 + e^-llr) + mean_do log2(1 + e^llr) ], in
/// bits. Throws InvalidInputError if a class is empty or a value is not
/// finite.
double cllr(const LlrSet &llrs);

/// Survival proportions of both classes at one base-10 threshold. An empty
/// class reports proportion 0.
TippettPoint tippett_point(const LlrSet &llrs, double threshold_log10);

/// Evenly spaced thresholds covering the pooled base-10 LLR range plus a
/// margin on each side, so the first point reads (1, 1) and the last (0, 0).
/// Throws InvalidInputError if n_thresholds < 2 or there are no values.
TippettCurve tippett_curve(const LlrSet &llrs,
                           int n_thresholds = kDefaultTippettThresholds);

struct ScorePair {
  double so_score;
  double do_score;
  std::optional<std::string> group;
};

/// One same-origin and one different-origin score per questioned item. When
/// groups are used, every pair must carry one.
struct PairedScoreDb {
  std::vector<ScorePair> pairs;
};

/// Called once per fold, before training, with the indices of the pairs the
/// fold trains on.
using FoldObserver =
    std::function<void(std::size_t fold, std::span<const std::size_t> train)>;

/// Leave-one-pair-out calibration: each pair is converted by weights trained
/// on every other pair, excluding the whole group of the held-out pair when
/// groups are present. Output is in input order. Training failures are
/// rethrown as FoldError carrying the fold index.
LlrSet crossval_calibrate(const PairedScoreDb &db, const TrainConfig &config,
                          const FoldObserver &observer = {});

}  // namespace lrcal

#endif  // LRCAL_EVALUATION_HPP_
