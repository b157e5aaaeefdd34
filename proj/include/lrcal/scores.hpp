// include/lrcal/scores.hpp

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

#ifndef LRCAL_SCORES_HPP_
#define LRCAL_SCORES_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace lrcal {

/// Univariate training or test scores split by ground truth.
struct LabeledScores {
  std::vector<double> same_origin;
  std::vector<double> different_origin;

  /// Throws InvalidInputError if a class has fewer than min_per_class scores
  /// or any score is non-finite.
  void validate(std::size_t min_per_class = 1) const;
};

/// Parallel scores from `dim` systems: one row of `dim` scores per
/// comparison, stored row-major per class.
class ParallelScores {
 public:
  explicit ParallelScores(std::size_t dim);

  /// Throws InvalidInputError on a row of the wrong width or with a
  /// non-finite value.
  void add_same_origin(std::span<const double> row);
  void add_different_origin(std::span<const double> row);

  std::size_t dim() const { return dim_; }
  std::size_t n_same_origin() const { return so_.size() / dim_; }
  std::size_t n_different_origin() const { return do_.size() / dim_; }

  std::span<const double> same_origin(std::size_t i) const {
    return {so_.data() + i * dim_, dim_};
  }
  std::span<const double> different_origin(std::size_t i) const {
    return {do_.data() + i * dim_, dim_};
  }

 private:
  std::size_t dim_;
  std::vector<double> so_;
  std::vector<double> do_;
};

/// One-column view of univariate scores.
ParallelScores to_parallel(const LabeledScores &scores);

}  // namespace lrcal

#endif  // LRCAL_SCORES_HPP_
