// src/gaussian_map.cpp

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

#include "lrcal/gaussian_map.hpp"

#include <cmath>
#include <string>

#include "lrcal/error.hpp"
#include "lrcal/numeric.hpp"

namespace lrcal {

ScoreGaussianModel::ScoreGaussianModel(double mu_so, double mu_do,
                                       double sigma)
    : mu_so_(mu_so), mu_do_(mu_do), sigma_(sigma) {
  if (!std::isfinite(mu_so) || !std::isfinite(mu_do))
    throw InvalidInputError("score model means must be finite");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DegenerateDataError("pooled score sd must be finite and > 0");
  if (!(mu_so > mu_do))
    throw DegenerateDataError(
        "same-origin mean " + std::to_string(mu_so) +
        " does not exceed different-origin mean " + std::to_string(mu_do) +
        "; higher scores must support the same-origin hypothesis");
}

ScoreGaussianModel train_score_gaussians(const LabeledScores &scores) {
  scores.validate(2);
  auto mean_of = [](const std::vector<double> &v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  const double mu_so = mean_of(scores.same_origin);
  const double mu_do = mean_of(scores.different_origin);
  double ss = 0.0;
  for (double x : scores.same_origin) ss += (x - mu_so) * (x - mu_so);
  for (double x : scores.different_origin) ss += (x - mu_do) * (x - mu_do);
  const double dof = static_cast<double>(scores.same_origin.size() +
                                         scores.different_origin.size() - 2);
  const double var = ss / dof;
  if (!(var > 0.0))
    throw DegenerateDataError("pooled within-group variance is zero");
  return ScoreGaussianModel(mu_so, mu_do, std::sqrt(var));
}

AffineMap model_to_affine(const ScoreGaussianModel &model) {
  const double var = model.sigma() * model.sigma();
  const double mu_so = model.mu_so();
  const double mu_do = model.mu_do();
  return AffineMap{(mu_do * mu_do - mu_so * mu_so) / (2.0 * var),
                   (mu_so - mu_do) / var};
}

double score_llr(double s, const ScoreGaussianModel &model) {
  if (!std::isfinite(s)) throw InvalidInputError("score must be finite");
  const AffineMap map = model_to_affine(model);
  return map.alpha + map.beta * s;
}

double posterior_prob(double s, const ScoreGaussianModel &model) {
  return inverse_logit(score_llr(s, model));
}

double logit(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw InvalidInputError("logit needs p in (0, 1), got " +
                            std::to_string(p));
  return std::log(p) - std::log1p(-p);
}

double inverse_logit(double z) { return sigmoid(z); }

}  // namespace lrcal
