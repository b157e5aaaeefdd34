// include/lrcal/error.hpp

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

#ifndef LRCAL_ERROR_HPP_
#define LRCAL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrcal {

enum class ErrorKind {
  kInvalidInput,    // malformed or out-of-contract arguments
  kDegenerateData,  // e.g. zero variance, too few samples
  kSeparation,      // logistic-regression weights diverge
  kIllConditioned,  // collinear predictors without ridge
  kNoConvergence,   // optimizer gave up for another reason
};

/// True for the kinds a caller can fix by changing the input data or
/// arguments; false for numerical failures of the trainer.
inline bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::kInvalidInput ||
         kind == ErrorKind::kDegenerateData;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string &what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

class DegenerateDataError : public Error {
 public:
  explicit DegenerateDataError(const std::string &what)
      : Error(ErrorKind::kDegenerateData, what) {}
};

class SeparationError : public Error {
 public:
  explicit SeparationError(const std::string &what)
      : Error(ErrorKind::kSeparation, what) {}
};

class IllConditionedError : public Error {
 public:
  explicit IllConditionedError(const std::string &what)
      : Error(ErrorKind::kIllConditioned, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string &what)
      : Error(ErrorKind::kNoConvergence, what) {}
};

/// Raised by cross-validation when training a fold fails. Keeps the kind of
/// the underlying failure so callers can still tell input from numerical
/// problems.
class FoldError : public Error {
 public:
  FoldError(std::size_t fold, const Error &cause)
      : Error(cause.kind(),
              "fold " + std::to_string(fold) + ": " + cause.what()),
        fold_(fold) {}
  std::size_t fold() const { return fold_; }

 private:
  std::size_t fold_;
};

}  // namespace lrcal

#endif  // LRCAL_ERROR_HPP_
