// src/score_engine.cpp

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

#include "lrcal/score_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lrcal/error.hpp"
#include "lrcal/numeric.hpp"

namespace lrcal {

namespace {

// ln(1 / sqrt(2 pi))
constexpr double kLogInvSqrt2Pi = -0.91893853320467274178;

double normal_log_pdf(double x, double mean, double sd) {
  const double z = (x - mean) / sd;
  return kLogInvSqrt2Pi - std::log(sd) - 0.5 * z * z;
}

void require_finite(double x, const char *what) {
  if (!std::isfinite(x))
    throw InvalidInputError(std::string(what) + " must be finite");
}

}  // namespace

GaussianParams::GaussianParams(double mean, double sd) : mean_(mean), sd_(sd) {
  require_finite(mean, "Gaussian mean");
  if (!(sd > 0.0) || !std::isfinite(sd))
    throw InvalidInputError("Gaussian sd must be finite and > 0, got " +
                            std::to_string(sd));
}

double GaussianParams::log_pdf(double x) const {
  return normal_log_pdf(x, mean_, sd_);
}

Gmm::Gmm(std::vector<GmmComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw InvalidInputError("Gaussian mixture needs at least one component");
  double total = 0.0;
  for (const auto &c : components_) {
    if (!(c.weight > 0.0 && c.weight <= 1.0))
      throw InvalidInputError("mixture weight outside (0, 1]: " +
                              std::to_string(c.weight));
    static_cast<void>(GaussianParams(c.mean, c.sd));  // validates mean, sd
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidInputError("mixture weights sum to " + std::to_string(total) +
                            ", expected 1");
}

Gmm Gmm::single(const GaussianParams &g) {
  return Gmm({GmmComponent{1.0, g.mean(), g.sd()}});
}

double Gmm::log_pdf(double x) const {
  std::vector<double> terms;
  terms.reserve(components_.size());
  for (const auto &c : components_)
    terms.push_back(std::log(c.weight) + normal_log_pdf(x, c.mean, c.sd));
  return log_sum_exp(terms);
}

OffenderData::OffenderData(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.empty())
    throw InvalidInputError("offender data must contain at least one point");
  for (double x : points_) require_finite(x, "offender data point");
}

GaussianParams fit_gaussian(std::span<const double> samples) {
  if (samples.size() < 2)
    throw DegenerateDataError("need at least 2 samples to fit a Gaussian, got " +
                              std::to_string(samples.size()));
  double mean = 0.0;
  for (double x : samples) {
    require_finite(x, "sample");
    mean += x;
  }
  mean /= static_cast<double>(samples.size());
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(samples.size() - 1);
  if (!(var > 0.0))
    throw DegenerateDataError("samples have zero variance");
  return GaussianParams(mean, std::sqrt(var));
}

double gaussian_lr(double x, const GaussianParams &suspect,
                   const GaussianParams &background) {
  require_finite(x, "raw-data value");
  return suspect.log_pdf(x) - background.log_pdf(x);
}

double gmm_log_pdf(double x, const Gmm &model) {
  require_finite(x, "raw-data value");
  return model.log_pdf(x);
}

double gmm_pdf(double x, const Gmm &model) {
  return std::exp(gmm_log_pdf(x, model));
}

double gmm_lr(double x, const Gmm &suspect, const Gmm &background) {
  const double num = gmm_log_pdf(x, suspect);
  const double den = gmm_log_pdf(x, background);
  if (std::isinf(num) && std::isinf(den))
    throw ConvergenceError("both mixture densities vanish at x = " +
                           std::to_string(x));
  return std::clamp(num - den, -kLogLrCap, kLogLrCap);
}

double score_from_points(const OffenderData &data, const Gmm &suspect,
                         const Gmm &background) {
  double sum = 0.0;
  for (double x : data.points()) sum += gmm_lr(x, suspect, background);
  return sum / static_cast<double>(data.points().size());
}

BimodalDemo bimodal_demo() {
  // Suspect peaks at +/-2 with narrow spread; the population is broad and
  // centred on the suspect's trough.
  Gmm suspect({{0.5, -2.0, 0.5}, {0.5, 2.0, 0.5}});
  Gmm background({{1.0, 0.0, 2.0}});
  return BimodalDemo{std::move(suspect), std::move(background), -2.0, 2.0};
}

}  // namespace lrcal
