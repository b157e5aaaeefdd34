// include/lrcal/logreg.hpp

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

// Equal-prior binomial logistic regression for score calibration (one
// system) and fusion (several systems scoring the same comparisons).
//
// The trained map is  ln LR = alpha + sum_k beta_k * s_k.  Training minimises
//
//   J = 1/(2 N_so) sum_so softplus(-z) + 1/(2 N_do) sum_do softplus(z)
//       + lambda/2 * sum_k beta_k^2,
//
// where z = alpha + beta . s. The per-class 1/(2 N) weights make the two
// hypotheses equally probable a priori whatever the class counts are, so the
// fitted log posterior odds are log likelihood ratios. The intercept is
// never penalised.

#ifndef LRCAL_LOGREG_HPP_
#define LRCAL_LOGREG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "lrcal/scores.hpp"

namespace lrcal {

/// Ridge weight of the robust training mode recommended for separated data.
inline constexpr double kRobustRidgeLambda = 0.001;

struct TrainingProvenance {
  std::size_t n_so = 0;
  std::size_t n_do = 0;
  double ridge_lambda = 0.0;
};

struct CalibrationWeights {
  double alpha = 0.0;
  std::vector<double> betas;
  TrainingProvenance provenance;

  std::size_t dim() const { return betas.size(); }
};

struct TrainConfig {
  double ridge_lambda = 0.0;
  double grad_tolerance = 1e-8;
  int max_iterations = 10000;

  /// Throws InvalidInputError for a negative ridge, non-positive tolerance
  /// or iteration budget.
  void validate() const;
};

/// The training objective above. Throws InvalidInputError if the weights'
/// dimension differs from the data's or a class is empty.
double objective(const CalibrationWeights &weights, const ParallelScores &data,
                 const TrainConfig &config);

/// Damped Newton from all-zero weights until max |gradient| < tolerance and
/// the Newton step has collapsed.
///
/// Errors: InvalidInputError for empty classes or bad config;
/// SeparationError when the weights diverge (complete or quasi-complete
/// separation with no ridge); IllConditionedError for collinear score
/// columns with no ridge; ConvergenceError otherwise.
CalibrationWeights train_fusion(const ParallelScores &scores,
                                const TrainConfig &config = {});

/// Univariate case of train_fusion; produces identical results.
CalibrationWeights train_calibration(const LabeledScores &scores,
                                     const TrainConfig &config = {});

/// alpha + betas . scores, natural-log LR.
double apply_weights(const CalibrationWeights &weights,
                     std::span<const double> scores);
double apply_weights(const CalibrationWeights &weights, double score);

}  // namespace lrcal

#endif  // LRCAL_LOGREG_HPP_
