// src/logreg.cpp

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

#include "lrcal/logreg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "lrcal/error.hpp"
#include "lrcal/numeric.hpp"

namespace lrcal {

namespace {

// Smallest-to-largest Hessian eigenvalue ratio below which the Newton system
// is treated as singular.
constexpr double kMinEigenRatio = 1e-13;
// Largest Hessian eigenvalue below which curvature has underflowed.
constexpr double kMinCurvature = 1e-250;
// A converged Newton step is at most this fraction of (1 + max |w|).
constexpr double kStepTolerance = 1e-6;
// Consecutive iterations of growing weight norm that mark divergence.
constexpr int kDivergenceStreak = 5;
constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 60;

const char *const kSeparationHint =
    "complete or near-complete separation between the same-origin and "
    "different-origin training scores is the likely cause; retry with a "
    "ridge penalty (e.g. 0.001)";

// Parameter vector layout: [alpha, beta_1, ..., beta_n].
class Problem {
 public:
  Problem(const ParallelScores &data, double ridge)
      : data_(data),
        ridge_(ridge),
        dim_(data.dim()),
        w_so_(1.0 / (2.0 * static_cast<double>(data.n_same_origin()))),
        w_do_(1.0 / (2.0 * static_cast<double>(data.n_different_origin()))) {}

  std::size_t n_params() const { return dim_ + 1; }

  double value(const Eigen::VectorXd &w) const {
    double so = 0.0;
    for (std::size_t i = 0; i < data_.n_same_origin(); ++i)
      so += softplus(-affine(w, data_.same_origin(i)));
    double dif = 0.0;
    for (std::size_t i = 0; i < data_.n_different_origin(); ++i)
      dif += softplus(affine(w, data_.different_origin(i)));
    return w_so_ * so + w_do_ * dif + penalty(w);
  }

  // Objective, gradient and Hessian in one pass.
  double evaluate(const Eigen::VectorXd &w, Eigen::VectorXd &grad,
                  Eigen::MatrixXd &hess) const {
    const std::size_t p = n_params();
    Eigen::VectorXd g_so = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd g_do = Eigen::VectorXd::Zero(p);
    Eigen::MatrixXd h_so = Eigen::MatrixXd::Zero(p, p);
    Eigen::MatrixXd h_do = Eigen::MatrixXd::Zero(p, p);
    double so = accumulate(w, /*same_origin=*/true, g_so, h_so);
    double dif = accumulate(w, /*same_origin=*/false, g_do, h_do);

    grad = w_so_ * g_so + w_do_ * g_do;
    hess = w_so_ * h_so + w_do_ * h_do;
    for (std::size_t k = 1; k < p; ++k) {
      grad[k] += ridge_ * w[k];
      hess(k, k) += ridge_;
    }
    hess = hess.selfadjointView<Eigen::Lower>();
    return w_so_ * so + w_do_ * dif + penalty(w);
  }

 private:
  double affine(const Eigen::VectorXd &w, std::span<const double> s) const {
    double z = w[0];
    for (std::size_t k = 0; k < dim_; ++k) z += w[k + 1] * s[k];
    return z;
  }

  double penalty(const Eigen::VectorXd &w) const {
    if (ridge_ == 0.0) return 0.0;
    return 0.5 * ridge_ * w.tail(dim_).squaredNorm();
  }

  // Unweighted class sums; only the lower triangle of hess is filled.
  double accumulate(const Eigen::VectorXd &w, bool same_origin,
                    Eigen::VectorXd &grad, Eigen::MatrixXd &hess) const {
    const std::size_t n =
        same_origin ? data_.n_same_origin() : data_.n_different_origin();
    const std::size_t p = n_params();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::span<const double> s =
          same_origin ? data_.same_origin(i) : data_.different_origin(i);
      const double z = affine(w, s);
      // d/dz softplus(-z) = -sigmoid(-z);  d/dz softplus(z) = sigmoid(z).
      double dz;
      if (same_origin) {
        total += softplus(-z);
        dz = -sigmoid(-z);
      } else {
        total += softplus(z);
        dz = sigmoid(z);
      }
      const double curv = sigmoid(z) * sigmoid(-z);
      for (std::size_t a = 0; a < p; ++a) {
        const double xa = a == 0 ? 1.0 : s[a - 1];
        grad[a] += dz * xa;
        for (std::size_t b = 0; b <= a; ++b) {
          const double xb = b == 0 ? 1.0 : s[b - 1];
          hess(a, b) += curv * xa * xb;
        }
      }
    }
    return total;
  }

  const ParallelScores &data_;
  double ridge_;
  std::size_t dim_;
  double w_so_;
  double w_do_;
};

void check_data(const ParallelScores &data) {
  if (data.n_same_origin() == 0 || data.n_different_origin() == 0)
    throw InvalidInputError(
        "training needs at least one same-origin and one different-origin "
        "score, got " +
        std::to_string(data.n_same_origin()) + " and " +
        std::to_string(data.n_different_origin()));
}

CalibrationWeights to_weights(const Eigen::VectorXd &w,
                              const ParallelScores &data, double ridge) {
  CalibrationWeights out;
  out.alpha = w[0];
  out.betas.assign(w.data() + 1, w.data() + w.size());
  out.provenance = {data.n_same_origin(), data.n_different_origin(), ridge};
  return out;
}

}  // namespace

void TrainConfig::validate() const {
  if (!(ridge_lambda >= 0.0) || !std::isfinite(ridge_lambda))
    throw InvalidInputError("ridge_lambda must be finite and >= 0");
  if (!(grad_tolerance > 0.0))
    throw InvalidInputError("grad_tolerance must be > 0");
  if (max_iterations <= 0)
    throw InvalidInputError("max_iterations must be positive");
}

double objective(const CalibrationWeights &weights, const ParallelScores &data,
                 const TrainConfig &config) {
  config.validate();
  check_data(data);
  if (weights.dim() != data.dim())
    throw InvalidInputError("weights have " + std::to_string(weights.dim()) +
                            " slopes but data have " +
                            std::to_string(data.dim()) + " columns");
  Eigen::VectorXd w(data.dim() + 1);
  w[0] = weights.alpha;
  for (std::size_t k = 0; k < data.dim(); ++k) w[k + 1] = weights.betas[k];
  return Problem(data, config.ridge_lambda).value(w);
}

CalibrationWeights train_fusion(const ParallelScores &scores,
                                const TrainConfig &config) {
  config.validate();
  check_data(scores);
  const Problem problem(scores, config.ridge_lambda);
  const std::size_t p = problem.n_params();

  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd grad(p);
  Eigen::MatrixXd hess(p, p);
  double prev_norm = 0.0;
  int streak = 0;

  auto diverged = [&]() { return streak >= kDivergenceStreak; };

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const double value = problem.evaluate(w, grad, hess);
    if (!std::isfinite(value) || !grad.allFinite())
      throw ConvergenceError("objective became non-finite during training");

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spectrum(
        hess, Eigen::EigenvaluesOnly);
    const double top = spectrum.eigenvalues().maxCoeff();
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    const bool singular =
        spectrum.info() != Eigen::Success || ldlt.info() != Eigen::Success ||
        !(top >= kMinCurvature) ||
        spectrum.eigenvalues().minCoeff() < kMinEigenRatio * top;
    if (singular) {
      if (iter == 0)
        throw IllConditionedError(
            "score columns are collinear or constant; the Newton system is "
            "singular. Remove redundant systems or add a ridge penalty");
      if (diverged())
        throw SeparationError(std::string("weights diverge: ") +
                              kSeparationHint);
      throw ConvergenceError("Newton system became singular at iteration " +
                             std::to_string(iter));
    }

    const Eigen::VectorXd step = -ldlt.solve(grad);
    const double grad_max = grad.lpNorm<Eigen::Infinity>();
    if (grad_max < config.grad_tolerance &&
        step.lpNorm<Eigen::Infinity>() <=
            kStepTolerance * (1.0 + w.lpNorm<Eigen::Infinity>()))
      return to_weights(w, scores, config.ridge_lambda);

    // Backtracking line search on the Armijo condition.
    const double slope = grad.dot(step);
    double t = 1.0;
    bool accepted = false;
    Eigen::VectorXd next(p);
    for (int h = 0; h < kMaxHalvings; ++h, t *= 0.5) {
      next = w + t * step;
      if (problem.value(next) <= value + kArmijo * t * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No representable decrease left: accept if already stationary.
      if (grad_max < config.grad_tolerance)
        return to_weights(w, scores, config.ridge_lambda);
      if (diverged())
        throw SeparationError(std::string("weights diverge: ") +
                              kSeparationHint);
      throw ConvergenceError("line search failed at iteration " +
                             std::to_string(iter));
    }

    const double norm = next.norm();
    streak = norm > prev_norm ? streak + 1 : 0;
    prev_norm = norm;
    w = next;
  }

  if (diverged())
    throw SeparationError("no convergence after " +
                          std::to_string(config.max_iterations) +
                          " iterations with growing weights: " +
                          kSeparationHint);
  throw ConvergenceError("no convergence after " +
                         std::to_string(config.max_iterations) + " iterations");
}

CalibrationWeights train_calibration(const LabeledScores &scores,
                                     const TrainConfig &config) {
  scores.validate(1);
  return train_fusion(to_parallel(scores), config);
}

double apply_weights(const CalibrationWeights &weights,
                     std::span<const double> scores) {
  if (scores.size() != weights.dim())
    throw InvalidInputError("score vector has " +
                            std::to_string(scores.size()) +
                            " entries, model expects " +
                            std::to_string(weights.dim()));
  double z = weights.alpha;
  for (std::size_t k = 0; k < scores.size(); ++k)
    z += weights.betas[k] * scores[k];
  return z;
}

double apply_weights(const CalibrationWeights &weights, double score) {
  return apply_weights(weights, std::span<const double>(&score, 1));
}

}  // namespace lrcal
