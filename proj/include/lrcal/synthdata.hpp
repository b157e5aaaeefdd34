// include/lrcal/synthdata.hpp

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

// Synthetic score configurations and a reproducible Gaussian sampler.
//
// The generator is xoshiro256** seeded through splitmix64, with normals from
// the Box-Muller transform (both outputs of each pair are used, cosine
// first). Uniforms take the top 53 bits of each 64-bit output. Given a seed
// the sequence depends only on IEEE-754 double arithmetic and libm's
// log/sqrt/sin/cos.

#ifndef LRCAL_SYNTHDATA_HPP_
#define LRCAL_SYNTHDATA_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "lrcal/gaussian_map.hpp"
#include "lrcal/scores.hpp"

namespace lrcal {

/// The four equal-variance training configurations: a perfectly calibrated
/// system, then a shifted, a scaled, and a shifted-and-scaled one.
enum class FigureId { kFig4, kFig5, kFig6, kFig7 };

inline constexpr std::array<FigureId, 4> kAllFigures = {
    FigureId::kFig4, FigureId::kFig5, FigureId::kFig6, FigureId::kFig7};

struct FigureConfig {
  FigureId id;
  ScoreGaussianModel model;
  double expected_alpha;
  double expected_beta;
};

FigureConfig figure_config(FigureId id);

/// "fig4" ... "fig7", case-sensitive.
std::optional<FigureId> parse_figure_id(std::string_view text);
std::string_view figure_name(FigureId id);

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_;
};

class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
  /// Standard normal deviate.
  double next();

 private:
  Xoshiro256StarStar rng_;
  std::optional<double> cached_;
};

/// n_so same-origin scores from N(mu_so, sigma^2) followed by n_do
/// different-origin scores from N(mu_do, sigma^2), one stream per seed.
LabeledScores sample_scores(const ScoreGaussianModel &model, std::size_t n_so,
                            std::size_t n_do, std::uint64_t seed);

}  // namespace lrcal

#endif  // LRCAL_SYNTHDATA_HPP_
