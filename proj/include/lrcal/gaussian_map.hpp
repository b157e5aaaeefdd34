// include/lrcal/gaussian_map.hpp

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

// Score-to-LR conversion with two equal-variance Gaussians fitted to
// same-origin and different-origin training scores. With a shared variance
// the log of the pdf ratio is affine in the score, which is exactly the
// shift-and-scale form that logistic-regression calibration learns.

#ifndef LRCAL_GAUSSIAN_MAP_HPP_
#define LRCAL_GAUSSIAN_MAP_HPP_

#include "lrcal/scores.hpp"

namespace lrcal {

class ScoreGaussianModel {
 public:
  /// Requires sigma > 0 and mu_so > mu_do; a model whose same-origin mean
  /// does not exceed its different-origin mean is rejected with
  /// DegenerateDataError.
  ScoreGaussianModel(double mu_so, double mu_do, double sigma);

  double mu_so() const { return mu_so_; }
  double mu_do() const { return mu_do_; }
  double sigma() const { return sigma_; }

 private:
  double mu_so_;
  double mu_do_;
  double sigma_;
};

/// ln LR(s) = alpha + beta * s, natural-log units.
struct AffineMap {
  double alpha;
  double beta;
};

/// Class means and pooled within-group sd (denominator N_so + N_do - 2).
/// Needs at least two scores per class.
ScoreGaussianModel train_score_gaussians(const LabeledScores &scores);

AffineMap model_to_affine(const ScoreGaussianModel &model);

/// Natural-log LR of score s under the model.
double score_llr(double s, const ScoreGaussianModel &model);

/// p(H_so | s) under equal priors.
double posterior_prob(double s, const ScoreGaussianModel &model);

/// ln(p / (1 - p)); p must lie strictly inside (0, 1).
double logit(double p);
double inverse_logit(double z);

}  // namespace lrcal

#endif  // LRCAL_GAUSSIAN_MAP_HPP_
