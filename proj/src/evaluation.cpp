// src/evaluation.cpp

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

#include "lrcal/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrcal/error.hpp"
#include "lrcal/numeric.hpp"

namespace lrcal {

namespace {

void check_finite(const std::vector<double> &values) {
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite log LR");
}

std::vector<double> sorted_log10(const std::vector<double> &llrs) {
  std::vector<double> out;
  out.reserve(llrs.size());
  for (double v : llrs) out.push_back(v / kLn10);
  std::sort(out.begin(), out.end());
  return out;
}

double survival(const std::vector<double> &sorted, double threshold) {
  if (sorted.empty()) return 0.0;
  const auto first_ge =
      std::lower_bound(sorted.begin(), sorted.end(), threshold);
  return static_cast<double>(sorted.end() - first_ge) /
         static_cast<double>(sorted.size());
}

}  // namespace

double cllr(const LlrSet &llrs) {
  if (llrs.same_origin.empty() || llrs.different_origin.empty())
    throw InvalidInputError("Cllr needs same-origin and different-origin LLRs");
  check_finite(llrs.same_origin);
  check_finite(llrs.different_origin);
  double so = 0.0;
  for (double v : llrs.same_origin) so += softplus(-v);
  double dif = 0.0;
  for (double v : llrs.different_origin) dif += softplus(v);
  so /= static_cast<double>(llrs.same_origin.size());
  dif /= static_cast<double>(llrs.different_origin.size());
  return 0.5 * (so + dif) / kLn2;
}

TippettPoint tippett_point(const LlrSet &llrs, double threshold_log10) {
  return TippettPoint{threshold_log10,
                      survival(sorted_log10(llrs.same_origin), threshold_log10),
                      survival(sorted_log10(llrs.different_origin),
                               threshold_log10)};
}

TippettCurve tippett_curve(const LlrSet &llrs, int n_thresholds) {
  if (n_thresholds < 2)
    throw InvalidInputError("Tippett curve needs at least 2 thresholds");
  if (llrs.same_origin.empty() && llrs.different_origin.empty())
    throw InvalidInputError("Tippett curve needs at least one LLR");
  check_finite(llrs.same_origin);
  check_finite(llrs.different_origin);

  const std::vector<double> so = sorted_log10(llrs.same_origin);
  const std::vector<double> dif = sorted_log10(llrs.different_origin);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto *v : {&so, &dif}) {
    if (v->empty()) continue;
    lo = std::min(lo, v->front());
    hi = std::max(hi, v->back());
  }
  const double margin = std::max(0.05 * (hi - lo), 0.1);
  lo -= margin;
  hi += margin;

  TippettCurve curve;
  curve.points.reserve(static_cast<std::size_t>(n_thresholds));
  const double step = (hi - lo) / (n_thresholds - 1);
  for (int i = 0; i < n_thresholds; ++i) {
    const double t = i + 1 == n_thresholds ? hi : lo + i * step;
    curve.points.push_back({t, survival(so, t), survival(dif, t)});
  }
  return curve;
}

LlrSet crossval_calibrate(const PairedScoreDb &db, const TrainConfig &config,
                          const FoldObserver &observer) {
  const auto &pairs = db.pairs;
  if (pairs.size() < 3)
    throw InvalidInputError("cross-validation needs at least 3 pairs, got " +
                            std::to_string(pairs.size()));
  const bool grouped = pairs.front().group.has_value();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].group.has_value() != grouped)
      throw InvalidInputError(
          "pair " + std::to_string(i) +
          ": group ids must be given for every pair or for none");
    if (!std::isfinite(pairs[i].so_score) || !std::isfinite(pairs[i].do_score))
      throw InvalidInputError("pair " + std::to_string(i) +
                              ": non-finite score");
  }

  LlrSet out;
  out.same_origin.resize(pairs.size());
  out.different_origin.resize(pairs.size());
  std::vector<std::size_t> train;
  train.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    train.clear();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j == k) continue;
      if (grouped && *pairs[j].group == *pairs[k].group) continue;
      train.push_back(j);
    }
    if (observer) observer(k, train);

    LabeledScores fold;
    fold.same_origin.reserve(train.size());
    fold.different_origin.reserve(train.size());
    for (std::size_t j : train) {
      fold.same_origin.push_back(pairs[j].so_score);
      fold.different_origin.push_back(pairs[j].do_score);
    }
    try {
      if (train.empty())
        throw InvalidInputError("no training pairs left after excluding group");
      const CalibrationWeights w = train_calibration(fold, config);
      out.same_origin[k] = apply_weights(w, pairs[k].so_score);
      out.different_origin[k] = apply_weights(w, pairs[k].do_score);
    } catch (const Error &e) {
      throw FoldError(k, e);
    }
  }
  return out;
}

}  // namespace lrcal
