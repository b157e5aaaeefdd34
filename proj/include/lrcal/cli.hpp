// include/lrcal/cli.hpp

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

#ifndef LRCAL_CLI_HPP_
#define LRCAL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lrcal/evaluation.hpp"

namespace lrcal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;

/// Runs one `lrcal` command. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

/// Both survival curves on base-10 LLR axes.
std::string render_tippett_svg(const TippettCurve &curve,
                               std::string_view title);

}  // namespace lrcal::cli

#endif  // LRCAL_CLI_HPP_
