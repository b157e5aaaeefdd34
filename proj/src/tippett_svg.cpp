// src/tippett_svg.cpp

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

#include <cmath>
#include <iomanip>
#include <sstream>

#include "lrcal/cli.hpp"

namespace lrcal::cli {

namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_tippett_svg(const TippettCurve &curve,
                               std::string_view title) {
  std::ostringstream svg;
  svg << std::fixed << std::setprecision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (curve.points.size() < 2) return svg.str() + "</svg>\n";

  const double x_lo = curve.points.front().threshold_log10;
  const double x_hi = curve.points.back().threshold_log10;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double t) { return kLeft + (t - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double p) { return kTop + (1.0 - p) * ph; };

  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\">"
      << "Tippett plot: " << escape_xml(title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Integer log10 ticks, thinned to at most ~12 labels.
  const double first = std::ceil(x_lo), last = std::floor(x_hi);
  const double stride = std::max(1.0, std::ceil((last - first + 1) / 12.0));
  for (double t = first; t <= last; t += stride) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << kTop << "\" x2=\"" << px(t)
        << "\" y2=\"" << kTop + ph << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << px(t) << "\" y=\"" << kTop + ph + 16
        << "\" text-anchor=\"middle\">" << static_cast<long>(t)
        << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double p = i / 4.0;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(p) + 4
        << "\" text-anchor=\"end\">" << p << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 18
      << "\" text-anchor=\"middle\">log10 likelihood ratio</text>\n";
  svg << "<text transform=\"translate(18," << kTop + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">"
      << "proportion of LLRs &#8805; threshold</text>\n";

  auto polyline = [&](bool same_origin, const char *colour) {
    svg << "<polyline fill=\"none\" stroke=\"" << colour
        << "\" stroke-width=\"2\" points=\"";
    for (const auto &p : curve.points)
      svg << px(p.threshold_log10) << ','
          << py(same_origin ? p.so_proportion : p.do_proportion) << ' ';
    svg << "\"/>\n";
  };
  polyline(true, "#1f77b4");
  polyline(false, "#d62728");

  svg << "<text x=\"" << kLeft + pw - 8 << "\" y=\"" << kTop + 16
      << "\" text-anchor=\"end\" fill=\"#1f77b4\">same origin</text>\n";
  svg << "<text x=\"" << kLeft + pw - 8 << "\" y=\"" << kTop + 32
      << "\" text-anchor=\"end\" fill=\"#d62728\">different origin</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lrcal::cli
