// tests/test_evaluation.cpp

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
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lrcal/error.hpp"
#include "lrcal/evaluation.hpp"
#include "lrcal/numeric.hpp"
#include "lrcal/synthdata.hpp"
#include "oracles.hpp"

using namespace lrcal;

namespace {

std::vector<double> to_natural(std::vector<double> log10_values) {
  for (double &v : log10_values) v *= kLn10;
  return log10_values;
}

PairedScoreDb paired_sample(std::size_t n, std::uint64_t seed) {
  const LabeledScores s =
      sample_scores(figure_config(FigureId::kFig4).model, n, n, seed);
  PairedScoreDb db;
  for (std::size_t i = 0; i < n; ++i)
    db.pairs.push_back({s.same_origin[i], s.different_origin[i], std::nullopt});
  return db;
}

}  // namespace

TEST_CASE("cllr examples") {
  CHECK(cllr({{0.0, 0.0}, {0.0, 0.0, 0.0}}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cllr({{std::log(3.0)}, {-std::log(3.0)}}) ==
        doctest::Approx(0.41503749927884376).epsilon(1e-14));
  CHECK(cllr({{50.0}, {-50.0}}) < 1e-12);
  CHECK_THROWS_AS(cllr({{}, {1.0}}), InvalidInputError);
  CHECK_THROWS_AS(cllr({{1.0}, {}}), InvalidInputError);
  CHECK_THROWS_AS(cllr({{NAN}, {1.0}}), InvalidInputError);
  // Far beyond exp overflow.
  CHECK(std::isfinite(cllr({{-1000.0}, {1000.0}})));
}

TEST_CASE("cllr agrees with the definition") {
  NormalSampler n(17);
  for (int rep = 0; rep < 50; ++rep) {
    LlrSet set;
    for (int i = 0; i < 20; ++i) set.same_origin.push_back(1 + 2 * n.next());
    for (int i = 0; i < 15; ++i) set.different_origin.push_back(-1 + 2 * n.next());
    CHECK(cllr(set) == doctest::Approx(oracle::cllr_direct(set.same_origin,
                                                          set.different_origin))
                           .epsilon(1e-13));
  }
}

TEST_CASE("cllr symmetries") {
  LlrSet set{{2.0, -0.5, 1.2, 3.3}, {-1.0, 0.4, -2.2}};
  const double ref = cllr(set);
  std::reverse(set.same_origin.begin(), set.same_origin.end());
  std::rotate(set.different_origin.begin(), set.different_origin.begin() + 1,
              set.different_origin.end());
  CHECK(cllr(set) == doctest::Approx(ref).epsilon(1e-15));
  LlrSet swapped;
  for (double v : set.different_origin) swapped.same_origin.push_back(-v);
  for (double v : set.same_origin) swapped.different_origin.push_back(-v);
  CHECK(cllr(swapped) == doctest::Approx(ref).epsilon(1e-15));
}

TEST_CASE("tippett hand-count fixture") {
  const LlrSet set{to_natural({-0.5, 1, 2}), to_natural({-2, -1, 0.3})};
  const TippettPoint p = tippett_point(set, 0.0);
  CHECK(p.so_proportion == 2.0 / 3.0);
  CHECK(p.do_proportion == 1.0 / 3.0);
  const TippettPoint below = tippett_point(set, -2.5);
  CHECK(below.so_proportion == 1.0);
  CHECK(below.do_proportion == 1.0);
  const TippettPoint above = tippett_point(set, 2.5);
  CHECK(above.so_proportion == 0.0);
  CHECK(above.do_proportion == 0.0);
}

TEST_CASE("tippett curve structure") {
  NormalSampler n(5);
  LlrSet set;
  for (int i = 0; i < 300; ++i) set.same_origin.push_back(2 + 3 * n.next());
  for (int i = 0; i < 400; ++i) set.different_origin.push_back(-3 + 3 * n.next());
  const TippettCurve curve = tippett_curve(set);
  REQUIRE(curve.points.size() == 201);
  CHECK(curve.points.front().so_proportion == 1.0);
  CHECK(curve.points.front().do_proportion == 1.0);
  CHECK(curve.points.back().so_proportion == 0.0);
  CHECK(curve.points.back().do_proportion == 0.0);

  std::vector<double> so10, do10;
  for (double v : set.same_origin) so10.push_back(v / kLn10);
  for (double v : set.different_origin) do10.push_back(v / kLn10);
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const TippettPoint &p = curve.points[i];
    CHECK(p.so_proportion == oracle::proportion_at_least(so10, p.threshold_log10));
    CHECK(p.do_proportion == oracle::proportion_at_least(do10, p.threshold_log10));
    if (i > 0) {
      const TippettPoint &q = curve.points[i - 1];
      CHECK(p.threshold_log10 > q.threshold_log10);
      CHECK(p.so_proportion <= q.so_proportion);
      CHECK(p.do_proportion <= q.do_proportion);
    }
  }
}

TEST_CASE("tippett curve with perfectly separated classes") {
  const LlrSet set{{1.0, 2.0, 5.0}, {-4.0, -0.5, 0.5}};
  for (const TippettPoint &p : tippett_curve(set, 50).points)
    CHECK(p.so_proportion >= p.do_proportion);
}

TEST_CASE("tippett curve errors and edge cases") {
  CHECK_THROWS_AS(tippett_curve({{1.0}, {0.0}}, 1), InvalidInputError);
  CHECK_THROWS_AS(tippett_curve({{}, {}}, 10), InvalidInputError);
  // Single value: margin keeps the thresholds increasing.
  const TippettCurve one = tippett_curve({{0.7}, {}}, 3);
  CHECK(one.points[0].threshold_log10 < one.points[2].threshold_log10);
  CHECK(one.points[0].so_proportion == 1.0);
  CHECK(one.points[2].so_proportion == 0.0);
  CHECK(one.points[1].do_proportion == 0.0);
}

TEST_CASE("crossval on three pairs trains each fold on the other two") {
  const PairedScoreDb db{{{0.5, -0.3, {}}, {-0.2, 0.4, {}}, {1.0, -1.0, {}}}};
  std::vector<std::vector<std::size_t>> seen;
  TrainConfig cfg;
  cfg.ridge_lambda = kRobustRidgeLambda;
  const LlrSet out = crossval_calibrate(
      db, cfg, [&](std::size_t fold, std::span<const std::size_t> train) {
        CHECK(fold == seen.size());
        seen.emplace_back(train.begin(), train.end());
      });
  CHECK(out.same_origin.size() + out.different_origin.size() == 6);
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == std::vector<std::size_t>{1, 2});
  CHECK(seen[1] == std::vector<std::size_t>{0, 2});
  CHECK(seen[2] == std::vector<std::size_t>{0, 1});

  // Fold 1 by hand.
  const CalibrationWeights w =
      train_calibration({{0.5, 1.0}, {-0.3, -1.0}}, cfg);
  CHECK(out.same_origin[1] == apply_weights(w, -0.2));
  CHECK(out.different_origin[1] == apply_weights(w, 0.4));
}

TEST_CASE("crossval on identical pairs gives identical outputs") {
  PairedScoreDb db;
  for (int i = 0; i < 5; ++i) db.pairs.push_back({1.0, -1.0, std::nullopt});
  TrainConfig cfg;
  cfg.ridge_lambda = kRobustRidgeLambda;
  const LlrSet out = crossval_calibrate(db, cfg);
  for (double v : out.same_origin) CHECK(v == out.same_origin[0]);
  for (double v : out.different_origin) CHECK(v == out.different_origin[0]);
  CHECK(out.same_origin[0] > 0.0);
}

TEST_CASE("crossval group exclusion audit") {
  PairedScoreDb db = paired_sample(40, 99);
  for (std::size_t i = 0; i < db.pairs.size(); ++i)
    db.pairs[i].group = "mark" + std::to_string(i % 7);
  std::size_t folds = 0;
  crossval_calibrate(db, {}, [&](std::size_t fold, std::span<const std::size_t> train) {
    ++folds;
    for (std::size_t j : train) {
      CHECK(j != fold);
      CHECK(*db.pairs[j].group != *db.pairs[fold].group);
    }
    // Everything outside the held-out group is used.
    std::size_t same_group = 0;
    for (const auto &p : db.pairs) same_group += *p.group == *db.pairs[fold].group;
    CHECK(train.size() == db.pairs.size() - same_group);
  });
  CHECK(folds == db.pairs.size());
}

TEST_CASE("crossval Cllr is close to the resubstitution Cllr") {
  const PairedScoreDb db = paired_sample(50, 4);
  const LlrSet cv = crossval_calibrate(db, {});
  LabeledScores all;
  for (const auto &p : db.pairs) {
    all.same_origin.push_back(p.so_score);
    all.different_origin.push_back(p.do_score);
  }
  const CalibrationWeights w = train_calibration(all);
  LlrSet resub;
  for (double s : all.same_origin) resub.same_origin.push_back(apply_weights(w, s));
  for (double s : all.different_origin)
    resub.different_origin.push_back(apply_weights(w, s));
  CHECK(std::abs(cllr(cv) - cllr(resub)) < 0.1);
}

TEST_CASE("crossval error paths") {
  CHECK_THROWS_AS(crossval_calibrate({{{1, 0, {}}, {2, 0, {}}}}, {}),
                  InvalidInputError);
  const PairedScoreDb mixed{{{1, 0, "a"}, {2, 0, {}}, {3, 0, "b"}}};
  CHECK_THROWS_AS(crossval_calibrate(mixed, {}), InvalidInputError);

  // Separated folds without ridge: the failing fold is named.
  const PairedScoreDb separated{{{1, -1, {}}, {2, -2, {}}, {3, -3, {}}}};
  try {
    crossval_calibrate(separated, {});
    FAIL("expected a fold failure");
  } catch (const FoldError &e) {
    CHECK(e.fold() == 0);
    CHECK(e.kind() == ErrorKind::kSeparation);
    CHECK(std::string(e.what()).rfind("fold 0:", 0) == 0);
  }

  // A single group leaves nothing to train on.
  const PairedScoreDb one_group{{{1, -1, "g"}, {0.5, 0.2, "g"}, {-0.1, 0.3, "g"}}};
  CHECK_THROWS_AS(crossval_calibrate(one_group, {}), FoldError);
}
