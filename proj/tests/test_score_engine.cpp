// tests/test_score_engine.cpp

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lrcal/error.hpp"
#include "lrcal/score_engine.hpp"
#include "lrcal/synthdata.hpp"
#include "oracles.hpp"

using namespace lrcal;

TEST_CASE("fit_gaussian uses the n-1 denominator") {
  const std::vector<double> two{0.0, 2.0};
  const GaussianParams a = fit_gaussian(two);
  CHECK(a.mean() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a.sd() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const std::vector<double> three{1.0, 2.0, 3.0};
  const GaussianParams b = fit_gaussian(three);
  CHECK(b.mean() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(b.sd() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("fit_gaussian rejects degenerate data") {
  const std::vector<double> flat{-5.0, -5.0, -5.0};
  CHECK_THROWS_AS(fit_gaussian(flat), DegenerateDataError);
  const std::vector<double> one{3.0};
  CHECK_THROWS_AS(fit_gaussian(one), DegenerateDataError);
  CHECK_THROWS_AS(fit_gaussian(std::vector<double>{}), DegenerateDataError);
}

TEST_CASE("GaussianParams and Gmm validate their fields") {
  CHECK_THROWS_AS(GaussianParams(0.0, 0.0), InvalidInputError);
  CHECK_THROWS_AS(GaussianParams(0.0, -1.0), InvalidInputError);
  CHECK_THROWS_AS(GaussianParams(NAN, 1.0), InvalidInputError);
  CHECK_THROWS_AS(Gmm({}), InvalidInputError);
  CHECK_THROWS_AS(Gmm({{0.5, 0.0, 1.0}}), InvalidInputError);
  CHECK_THROWS_AS(Gmm({{0.5, 0.0, 1.0}, {0.6, 1.0, 1.0}}), InvalidInputError);
  CHECK_THROWS_AS(Gmm({{1.0, 0.0, 0.0}}), InvalidInputError);
  CHECK_NOTHROW(Gmm({{0.25, 0.0, 1.0}, {0.75, 1.0, 2.0}}));
  CHECK_THROWS_AS(OffenderData({}), InvalidInputError);
  CHECK_THROWS_AS(OffenderData({1.0, INFINITY}), InvalidInputError);
}

TEST_CASE("gaussian_lr examples") {
  const GaussianParams so(0.0, 1.0), dif(2.0, 1.0);
  CHECK(gaussian_lr(0.7, so, so) == 0.0);
  CHECK(gaussian_lr(1.0, so, dif) == doctest::Approx(0.0));
  // ((x - mu_do)^2 - (x - mu_so)^2) / (2 sigma^2) at x = 0.
  CHECK(gaussian_lr(0.0, so, dif) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::log(oracle::normal_pdf(0.0, 0, 1) / oracle::normal_pdf(0.0, 2, 1)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_lr(NAN, so, dif), InvalidInputError);
}

TEST_CASE("gaussian_lr stays finite far into the tails") {
  const GaussianParams so(0.0, 1.0), dif(1.0, 2.0);
  // 40 sd out both pdfs underflow in the linear domain.
  const double x = 40.0;
  CHECK(oracle::normal_pdf(x, 0, 1) == 0.0);
  const double llr = gaussian_lr(x, so, dif);
  CHECK(std::isfinite(llr));
  const double expected = std::log(2.0) - 0.5 * x * x + 0.5 * (39.0 / 2) * (39.0 / 2);
  CHECK(llr == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("gaussian_lr is antisymmetric and matches the pdf ratio") {
  NormalSampler normal(7);
  for (int i = 0; i < 500; ++i) {
    const GaussianParams a(3 * normal.next(), 0.2 + std::abs(normal.next()));
    const GaussianParams b(3 * normal.next(), 0.2 + std::abs(normal.next()));
    const double x = 4 * normal.next();
    CHECK(gaussian_lr(x, a, b) == doctest::Approx(-gaussian_lr(x, b, a)));
    const double pa = oracle::normal_pdf(x, a.mean(), a.sd());
    const double pb = oracle::normal_pdf(x, b.mean(), b.sd());
    if (pa > 1e-300 && pb > 1e-300)
      CHECK(std::exp(gaussian_lr(x, a, b)) ==
            doctest::Approx(pa / pb).epsilon(1e-10));
  }
}

TEST_CASE("gmm_pdf examples") {
  const Gmm standard({{1.0, 0.0, 1.0}});
  CHECK(gmm_pdf(0.0, standard) ==
        doctest::Approx(0.3989422804014327).epsilon(1e-14));

  const Gmm twin({{0.5, 0.3, 1.2}, {0.5, 0.3, 1.2}});
  const Gmm single({{1.0, 0.3, 1.2}});
  for (double x : {-4.0, -1.0, 0.3, 2.5})
    CHECK(gmm_pdf(x, twin) == doctest::Approx(gmm_pdf(x, single)).epsilon(1e-14));

  // 0.5 * 2 * phi(3)
  const Gmm symmetric({{0.5, -3.0, 1.0}, {0.5, 3.0, 1.0}});
  CHECK(gmm_pdf(0.0, symmetric) ==
        doctest::Approx(0.0044318484119380075).epsilon(1e-13));
}

TEST_CASE("gmm_pdf integrates to one") {
  const Gmm model({{0.2, -4.0, 0.5}, {0.5, 0.0, 1.5}, {0.3, 3.0, 0.8}});
  // +/- 12 sd beyond the extreme components.
  const double lo = -4.0 - 12 * 1.5, hi = 3.0 + 12 * 1.5;
  const double mass =
      oracle::trapezoid([&](double x) { return gmm_pdf(x, model); }, lo, hi,
                        200000);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("single-component gmm_lr equals gaussian_lr") {
  const GaussianParams so(1.5, 0.7), dif(-0.5, 2.0);
  const Gmm gso = Gmm::single(so), gdo = Gmm::single(dif);
  for (int i = 0; i < 1000; ++i) {
    const double x = -8.0 + 16.0 * i / 999.0;
    CHECK(std::abs(gmm_lr(x, gso, gdo) - gaussian_lr(x, so, dif)) < 1e-12);
  }
  CHECK(gmm_lr(0.4, gso, gso) == 0.0);
}

TEST_CASE("gmm_lr saturates instead of overflowing") {
  const Gmm narrow({{1.0, 0.0, 0.01}});
  const Gmm wide({{1.0, 0.0, 100.0}});
  CHECK(gmm_lr(50.0, narrow, wide) == -kLogLrCap);
  CHECK(gmm_lr(50.0, wide, narrow) == kLogLrCap);
}

TEST_CASE("score_from_points averages per-point log LRs") {
  const Gmm so({{1.0, 0.0, 1.0}});
  const Gmm dif({{1.0, 1.0, 1.0}});
  // ln LR(x) = (1 - 2x) / 2 for these models.
  CHECK(score_from_points(OffenderData({-0.4}), so, dif) ==
        doctest::Approx(gmm_lr(-0.4, so, dif)));

  // Points with LR 10 and 0.1 cancel.
  const double x10 = (1.0 - 2.0 * std::log(10.0)) / 2.0;
  const double x01 = (1.0 + 2.0 * std::log(10.0)) / 2.0;
  CHECK(gmm_lr(x10, so, dif) == doctest::Approx(std::log(10.0)));
  CHECK(score_from_points(OffenderData({x10, x01}), so, dif) ==
        doctest::Approx(0.0).epsilon(1e-12));

  const double c = gmm_lr(0.2, so, dif);
  CHECK(score_from_points(OffenderData({0.2, 0.2, 0.2}), so, dif) ==
        doctest::Approx(c));
}

TEST_CASE("score_from_points is permutation invariant") {
  const BimodalDemo demo = bimodal_demo();
  std::vector<double> pts{-2.3, 0.1, 1.7, 2.2, -0.8, 3.0};
  const double ref = score_from_points(OffenderData(pts), demo.suspect,
                                       demo.background);
  std::sort(pts.begin(), pts.end());
  do {
    CHECK(score_from_points(OffenderData(pts), demo.suspect,
                            demo.background) ==
          doctest::Approx(ref).epsilon(1e-14));
  } while (std::next_permutation(pts.begin(), pts.begin() + 4));
}

TEST_CASE("bimodal demo reproduces the mean-of-points pathology") {
  const BimodalDemo demo = bimodal_demo();
  const double mid = 0.5 * (demo.x1 + demo.x2);
  const double l1 = gmm_lr(demo.x1, demo.suspect, demo.background);
  const double l2 = gmm_lr(demo.x2, demo.suspect, demo.background);
  const double lm = gmm_lr(mid, demo.suspect, demo.background);
  CHECK(l1 > 0.0);
  CHECK(l2 > 0.0);
  CHECK(lm < 0.0);
  CHECK(lm < std::min(l1, l2));

  // Same values from the densities evaluated directly.
  auto direct = [](double x) {
    const double s = 0.5 * oracle::normal_pdf(x, -2.0, 0.5) +
                     0.5 * oracle::normal_pdf(x, 2.0, 0.5);
    return s / oracle::normal_pdf(x, 0.0, 2.0);
  };
  CHECK(std::exp(l1) == doctest::Approx(direct(demo.x1)).epsilon(1e-12));
  CHECK(std::exp(lm) == doctest::Approx(direct(mid)).epsilon(1e-12));
}
