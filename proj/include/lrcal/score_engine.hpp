// include/lrcal/score_engine.hpp

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

// Likelihood ratios computed directly from univariate raw data: a suspect
// model and a background (population) model are evaluated at each offender
// data point. All log LRs returned here are natural logs.

#ifndef LRCAL_SCORE_ENGINE_HPP_
#define LRCAL_SCORE_ENGINE_HPP_

#include <span>
#include <vector>

namespace lrcal {

/// gmm_lr saturates at +/- this value (natural log) instead of returning an
/// infinite log LR.
inline constexpr double kLogLrCap = 200.0;

class GaussianParams {
 public:
  /// Throws InvalidInputError unless mean is finite and sd is finite and > 0.
  GaussianParams(double mean, double sd);

  double mean() const { return mean_; }
  double sd() const { return sd_; }

  double log_pdf(double x) const;

 private:
  double mean_;
  double sd_;
};

struct GmmComponent {
  double weight;
  double mean;
  double sd;
};

/// Univariate Gaussian mixture. Weights lie in (0, 1] and sum to 1 within
/// 1e-12; there is at least one component.
class Gmm {
 public:
  explicit Gmm(std::vector<GmmComponent> components);
  static Gmm single(const GaussianParams &g);

  std::span<const GmmComponent> components() const { return components_; }
  double log_pdf(double x) const;

 private:
  std::vector<GmmComponent> components_;
};

/// Measurements from the questioned-origin sample. Non-empty, all finite.
class OffenderData {
 public:
  explicit OffenderData(std::vector<double> points);
  std::span<const double> points() const { return points_; }

 private:
  std::vector<double> points_;
};

/// Moment fit with the n-1 variance denominator. Throws DegenerateDataError
/// for fewer than two samples or zero variance.
GaussianParams fit_gaussian(std::span<const double> samples);

/// ln f(x | suspect) - ln f(x | background), evaluated in the log domain.
double gaussian_lr(double x, const GaussianParams &suspect,
                   const GaussianParams &background);

double gmm_log_pdf(double x, const Gmm &model);
double gmm_pdf(double x, const Gmm &model);

/// Log-domain GMM likelihood ratio, clamped to [-kLogLrCap, kLogLrCap].
double gmm_lr(double x, const Gmm &suspect, const Gmm &background);

/// Mean of the per-point log LRs.
double score_from_points(const OffenderData &data, const Gmm &suspect,
                         const Gmm &background);

struct BimodalDemo {
  Gmm suspect;
  Gmm background;
  double x1;
  double x2;
};

/// A fixed configuration with a two-peaked suspect model where each of two
/// offender points individually supports the same-origin hypothesis but
/// their mean lands in the suspect trough and supports the opposite.
BimodalDemo bimodal_demo();

}  // namespace lrcal

#endif  // LRCAL_SCORE_ENGINE_HPP_
