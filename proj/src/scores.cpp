// src/scores.cpp

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

#include "lrcal/scores.hpp"

#include <cmath>
#include <string>

#include "lrcal/error.hpp"

namespace lrcal {

namespace {

void check_class(const std::vector<double> &values, std::size_t min_count,
                 const char *name) {
  if (values.size() < min_count)
    throw InvalidInputError(std::string("need at least ") +
                            std::to_string(min_count) + " " + name +
                            " score(s), got " + std::to_string(values.size()));
  for (double v : values)
    if (!std::isfinite(v))
      throw InvalidInputError(std::string("non-finite ") + name + " score");
}

void append_row(std::vector<double> &dst, std::span<const double> row,
                std::size_t dim) {
  if (row.size() != dim)
    throw InvalidInputError("score row has " + std::to_string(row.size()) +
                            " columns, expected " + std::to_string(dim));
  for (double v : row)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite score in row");
  dst.insert(dst.end(), row.begin(), row.end());
}

}  // namespace

void LabeledScores::validate(std::size_t min_per_class) const {
  check_class(same_origin, min_per_class, "same-origin");
  check_class(different_origin, min_per_class, "different-origin");
}

ParallelScores::ParallelScores(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidInputError("score dimension must be >= 1");
}

void ParallelScores::add_same_origin(std::span<const double> row) {
  append_row(so_, row, dim_);
}

void ParallelScores::add_different_origin(std::span<const double> row) {
  append_row(do_, row, dim_);
}

ParallelScores to_parallel(const LabeledScores &scores) {
  ParallelScores out(1);
  for (double s : scores.same_origin) out.add_same_origin({&s, 1});
  for (double s : scores.different_origin) out.add_different_origin({&s, 1});
  return out;
}

}  // namespace lrcal
