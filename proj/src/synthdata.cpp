// src/synthdata.cpp

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

#include "lrcal/synthdata.hpp"

#include <cmath>
#include <numbers>

#include "lrcal/error.hpp"

namespace lrcal {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

FigureConfig figure_config(FigureId id) {
  switch (id) {
    case FigureId::kFig4:  // means half a unit either side of zero
      return {id, ScoreGaussianModel(0.5, -0.5, 1.0), 0.0, 1.0};
    case FigureId::kFig5:  // all scores shifted one unit left
      return {id, ScoreGaussianModel(-0.5, -1.5, 1.0), 1.0, 1.0};
    case FigureId::kFig6:  // within-group variance doubled
      return {id, ScoreGaussianModel(0.5, -0.5, std::numbers::sqrt2), 0.0,
              0.5};
    case FigureId::kFig7:  // different-origin scores shifted one unit left
      return {id, ScoreGaussianModel(0.5, -1.5, 1.0), 1.0, 2.0};
  }
  throw InvalidInputError("unknown figure id");
}

std::optional<FigureId> parse_figure_id(std::string_view text) {
  for (FigureId id : kAllFigures)
    if (figure_name(id) == text) return id;
  return std::nullopt;
}

std::string_view figure_name(FigureId id) {
  switch (id) {
    case FigureId::kFig4: return "fig4";
    case FigureId::kFig5: return "fig5";
    case FigureId::kFig6: return "fig6";
    case FigureId::kFig7: return "fig7";
  }
  return "unknown";
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto &word : s_) word = splitmix64(state);
}

std::uint64_t Xoshiro256StarStar::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256StarStar::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double NormalSampler::next() {
  if (cached_) {
    const double z = *cached_;
    cached_.reset();
    return z;
  }
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - rng_.uniform();
  const double u2 = rng_.uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

LabeledScores sample_scores(const ScoreGaussianModel &model, std::size_t n_so,
                            std::size_t n_do, std::uint64_t seed) {
  if (n_so == 0 || n_do == 0)
    throw InvalidInputError("sample_scores needs at least one score per class");
  NormalSampler normal(seed);
  LabeledScores out;
  out.same_origin.reserve(n_so);
  out.different_origin.reserve(n_do);
  for (std::size_t i = 0; i < n_so; ++i)
    out.same_origin.push_back(model.mu_so() + model.sigma() * normal.next());
  for (std::size_t i = 0; i < n_do; ++i)
    out.different_origin.push_back(model.mu_do() +
                                   model.sigma() * normal.next());
  return out;
}

}  // namespace lrcal
