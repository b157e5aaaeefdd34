// src/cli.cpp

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

#include "lrcal/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lrcal/error.hpp"
#include "lrcal/evaluation.hpp"
#include "lrcal/gaussian_map.hpp"
#include "lrcal/io.hpp"
#include "lrcal/logreg.hpp"
#include "lrcal/numeric.hpp"
#include "lrcal/score_engine.hpp"
#include "lrcal/synthdata.hpp"

namespace lrcal::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;
constexpr std::size_t kDefaultDemoSamples = 200000;

struct Options {
  std::string input;
  std::string model;
  std::string out;
  std::string tippett;
  std::string svg;
  std::string audit;
  std::string score_base = "e";
  std::string demo_id;
  double ridge = 0.0;
  int precision = 6;
  int thresholds = kDefaultTippettThresholds;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultDemoSamples;
};

class Fixed {
 public:
  explicit Fixed(int precision) : precision_(precision) {}
  std::string operator()(double v) const {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision_) << v;
    return s.str();
  }

 private:
  int precision_;
};

double input_scale(const Options &opt) {
  // Values were restricted to {e, 10} at parse time.
  return to_natural_factor(parse_log_base(opt.score_base).value());
}

ScoreTable load_scores(const Options &opt) {
  std::istringstream in(read_text_file(opt.input));
  return read_score_csv(in, opt.input, input_scale(opt));
}

// Writes to the --out file, or to `out` when no path was given.
void emit(const Options &opt, std::ostream &out, const std::string &text) {
  if (opt.out.empty())
    out << text;
  else
    write_text_file(opt.out, text);
}

LlrSet training_outputs(const CalibrationWeights &w, const ParallelScores &d) {
  LlrSet set;
  for (std::size_t i = 0; i < d.n_same_origin(); ++i)
    set.same_origin.push_back(apply_weights(w, d.same_origin(i)));
  for (std::size_t i = 0; i < d.n_different_origin(); ++i)
    set.different_origin.push_back(apply_weights(w, d.different_origin(i)));
  return set;
}

int train(const Options &opt, bool fusion, std::ostream &out) {
  const ScoreTable table = load_scores(opt);
  if (!fusion && table.dim() != 1)
    throw InvalidInputError(opt.input + ": calibrate-train takes exactly one "
                            "score column, got " +
                            std::to_string(table.dim()) +
                            "; use fuse-train for parallel scores");
  const ParallelScores data = to_parallel(table);
  if (data.n_same_origin() == 0 || data.n_different_origin() == 0)
    throw InvalidInputError(opt.input +
                            ": training needs both 'ss' and 'ds' rows");

  TrainConfig config;
  config.ridge_lambda = opt.ridge;
  const CalibrationWeights w = train_fusion(data, config);
  write_text_file(opt.model, weights_to_json(w));

  const Fixed fmt(opt.precision);
  out << "alpha = " << fmt(w.alpha) << '\n';
  if (w.dim() == 1) {
    out << "beta = " << fmt(w.betas[0]) << '\n';
  } else {
    for (std::size_t k = 0; k < w.dim(); ++k)
      out << "beta" << k + 1 << " = " << fmt(w.betas[k]) << '\n';
  }
  out << "training Cllr = " << fmt(cllr(training_outputs(w, data))) << '\n';
  out << "wrote " << opt.model << '\n';
  return kExitOk;
}

int apply_model(const Options &opt, std::ostream &out) {
  const CalibrationWeights w =
      weights_from_json(read_text_file(opt.model), opt.model);
  const ScoreTable table = load_scores(opt);
  if (table.dim() != w.dim())
    throw InvalidInputError(opt.input + ": " + std::to_string(table.dim()) +
                            " score column(s) but model " + opt.model +
                            " expects " + std::to_string(w.dim()));
  LlrTable llrs;
  llrs.labels = table.labels;
  for (std::size_t i = 0; i < table.rows(); ++i)
    llrs.llr_log10.push_back(apply_weights(w, table.row(i)) / kLn10);
  std::ostringstream csv;
  write_llr_csv(csv, llrs);
  emit(opt, out, csv.str());
  return kExitOk;
}

int evaluate(const Options &opt, std::ostream &out) {
  std::istringstream in(read_text_file(opt.input));
  const LlrSet llrs = to_llr_set(read_llr_csv(in, opt.input));
  const Fixed fmt(opt.precision);
  out << "n_ss = " << llrs.same_origin.size()
      << ", n_ds = " << llrs.different_origin.size() << '\n';
  out << "Cllr = " << fmt(cllr(llrs)) << '\n';
  if (!opt.tippett.empty() || !opt.svg.empty()) {
    const TippettCurve curve = tippett_curve(llrs, opt.thresholds);
    if (!opt.tippett.empty()) {
      std::ostringstream csv;
      write_tippett_csv(csv, curve);
      write_text_file(opt.tippett, csv.str());
      out << "wrote " << opt.tippett << '\n';
    }
    if (!opt.svg.empty()) {
      write_text_file(opt.svg, render_tippett_svg(curve, opt.input));
      out << "wrote " << opt.svg << '\n';
    }
  }
  return kExitOk;
}

int crossval(const Options &opt, std::ostream &out, std::ostream &err) {
  std::istringstream in(read_text_file(opt.input));
  const PairedScoreDb db = read_pairs_csv(in, opt.input, input_scale(opt));
  TrainConfig config;
  config.ridge_lambda = opt.ridge;

  std::ostringstream audit;
  audit << "fold,held_out_group,n_train,train_pairs\n";
  auto observer = [&](std::size_t fold, std::span<const std::size_t> train) {
    audit << fold << ',' << db.pairs[fold].group.value_or("") << ','
          << train.size() << ',';
    for (std::size_t i = 0; i < train.size(); ++i)
      audit << (i ? ";" : "") << train[i];
    audit << '\n';
  };

  LlrSet llrs;
  try {
    llrs = crossval_calibrate(db, config, observer);
  } catch (const FoldError &e) {
    // Data rows are numbered from 1 after the header.
    err << "error: cross-validation failed holding out data row "
        << e.fold() + 1 << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::kSeparation)
      err << "hint: retry with --ridge 0.001\n";
    return is_input_error(e.kind()) ? kExitInputError : kExitNumericalError;
  }
  if (!opt.audit.empty()) write_text_file(opt.audit, audit.str());

  LlrTable table;
  for (std::size_t k = 0; k < db.pairs.size(); ++k) {
    table.labels.push_back(Label::kSameSource);
    table.llr_log10.push_back(llrs.same_origin[k] / kLn10);
    table.labels.push_back(Label::kDifferentSource);
    table.llr_log10.push_back(llrs.different_origin[k] / kLn10);
  }
  std::ostringstream csv;
  write_llr_csv(csv, table);
  emit(opt, out, csv.str());

  const Fixed fmt(opt.precision);
  std::ostream &report = opt.out.empty() ? err : out;
  report << "folds = " << db.pairs.size() << '\n';
  report << "cross-validated Cllr = " << fmt(cllr(llrs)) << '\n';
  return kExitOk;
}

int demo_figure(const Options &opt, FigureId id, std::ostream &out) {
  const FigureConfig cfg = figure_config(id);
  const AffineMap analytic = model_to_affine(cfg.model);
  const LabeledScores sample =
      sample_scores(cfg.model, opt.samples, opt.samples, opt.seed);
  const CalibrationWeights w = train_calibration(sample, TrainConfig{});
  const AffineMap pooled = model_to_affine(train_score_gaussians(sample));

  const Fixed fmt(opt.precision);
  out << "figure = " << figure_name(id) << '\n';
  out << "generating model: mu_so = " << format_number(cfg.model.mu_so())
      << ", mu_do = " << format_number(cfg.model.mu_do())
      << ", sigma = " << format_number(cfg.model.sigma()) << '\n';
  out << "analytic: alpha = " << format_number(analytic.alpha)
      << ", beta = " << format_number(analytic.beta) << '\n';
  out << "sample: n_so = " << opt.samples << ", n_do = " << opt.samples
      << ", seed = " << opt.seed << '\n';
  out << "pooled-Gaussian fit: alpha = " << fmt(pooled.alpha)
      << ", beta = " << fmt(pooled.beta) << '\n';
  out << "logistic regression: alpha = " << fmt(w.alpha)
      << ", beta = " << fmt(w.betas[0]) << '\n';
  if (!opt.out.empty()) {
    std::ostringstream csv;
    write_score_csv(csv, make_score_table(sample));
    write_text_file(opt.out, csv.str());
    out << "wrote " << opt.out << '\n';
  }
  return kExitOk;
}

int demo_bimodal(const Options &opt, std::ostream &out) {
  const BimodalDemo demo = bimodal_demo();
  const double mid = 0.5 * (demo.x1 + demo.x2);
  const Fixed fmt(opt.precision);
  out << "point,x,lr,log10_lr\n";
  auto row = [&](const char *name, double x) {
    const double llr = gmm_lr(x, demo.suspect, demo.background);
    out << name << ',' << fmt(x) << ',' << fmt(std::exp(llr)) << ','
        << fmt(llr / kLn10) << '\n';
  };
  row("x1", demo.x1);
  row("x2", demo.x2);
  row("midpoint", mid);
  const double score = score_from_points(OffenderData({demo.x1, demo.x2}),
                                         demo.suspect, demo.background);
  out << "mean log LR of x1 and x2 = " << fmt(score) << " (LR "
      << fmt(std::exp(score)) << ")\n";
  return kExitOk;
}

int demo(const Options &opt, std::ostream &out) {
  if (opt.demo_id == "bimodal") return demo_bimodal(opt, out);
  const auto id = parse_figure_id(opt.demo_id);
  if (!id)
    throw InvalidInputError("unknown demo '" + opt.demo_id +
                            "'; expected fig4, fig5, fig6, fig7 or bimodal");
  if (opt.samples == 0) throw InvalidInputError("--n must be >= 1");
  return demo_figure(opt, *id, out);
}

void add_score_base(CLI::App *cmd, Options &opt) {
  cmd->add_option("--score-base", opt.score_base,
                  "Log base of input scores (e or 10)")
      ->check(CLI::IsMember({"e", "10"}))
      ->capture_default_str();
}

void add_precision(CLI::App *cmd, Options &opt) {
  cmd->add_option("--precision", opt.precision,
                  "Decimal places in printed reports")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options opt;
  CLI::App app{"Score-to-likelihood-ratio calibration, fusion and evaluation",
               "lrcal"};
  app.require_subcommand(1);

  auto *cal = app.add_subcommand(
      "calibrate-train", "Train a one-system calibration model");
  cal->add_option("scores", opt.input, "Scores CSV (label,s1)")->required();
  cal->add_option("--ridge", opt.ridge, "Ridge penalty on the slope")
      ->check(CLI::NonNegativeNumber);
  cal->add_option("--out", opt.model, "Model JSON to write")->required();
  add_score_base(cal, opt);
  add_precision(cal, opt);

  auto *fuse = app.add_subcommand(
      "fuse-train", "Train a fusion model on parallel scores");
  fuse->add_option("scores", opt.input, "Scores CSV (label,s1,...,sn)")
      ->required();
  fuse->add_option("--ridge", opt.ridge, "Ridge penalty on the slopes")
      ->check(CLI::NonNegativeNumber);
  fuse->add_option("--out", opt.model, "Model JSON to write")->required();
  add_score_base(fuse, opt);
  add_precision(fuse, opt);

  auto *apply = app.add_subcommand(
      "apply", "Convert scores to base-10 log likelihood ratios");
  apply->add_option("model", opt.model, "Model JSON")->required();
  apply->add_option("scores", opt.input, "Scores CSV")->required();
  apply->add_option("--out", opt.out, "LLR CSV to write (default stdout)");
  add_score_base(apply, opt);

  auto *eval = app.add_subcommand(
      "evaluate", "Report Cllr and Tippett curves for an LLR CSV");
  eval->add_option("llrs", opt.input, "LLR CSV (label,llr_log10)")->required();
  eval->add_option("--tippett", opt.tippett, "Tippett curve CSV to write");
  eval->add_option("--svg", opt.svg, "Tippett plot SVG to write");
  eval->add_option("--thresholds", opt.thresholds, "Tippett threshold count")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  add_precision(eval, opt);

  auto *cv = app.add_subcommand(
      "crossval", "Leave-one-pair-out cross-validated calibration");
  cv->add_option("pairs", opt.input, "Pairs CSV (so_score,do_score[,group])")
      ->required();
  cv->add_option("--ridge", opt.ridge, "Ridge penalty on the slope")
      ->check(CLI::NonNegativeNumber);
  cv->add_option("--out", opt.out, "LLR CSV to write (default stdout)");
  cv->add_option("--audit", opt.audit, "Per-fold training-set audit CSV");
  add_score_base(cv, opt);
  add_precision(cv, opt);

  auto *dm = app.add_subcommand(
      "demo", "Synthetic calibration demos (fig4..fig7) and the bimodal case");
  dm->add_option("id", opt.demo_id, "fig4, fig5, fig6, fig7 or bimodal")
      ->required();
  dm->add_option("--seed", opt.seed, "Sampler seed")->capture_default_str();
  dm->add_option("--n", opt.samples, "Scores per class")->capture_default_str();
  dm->add_option("--out", opt.out, "Write the sampled scores CSV here");
  add_precision(dm, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (cal->parsed()) return train(opt, /*fusion=*/false, out);
    if (fuse->parsed()) return train(opt, /*fusion=*/true, out);
    if (apply->parsed()) return apply_model(opt, out);
    if (eval->parsed()) return evaluate(opt, out);
    if (cv->parsed()) return crossval(opt, out, err);
    if (dm->parsed()) return demo(opt, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::kSeparation)
      err << "hint: retry with --ridge 0.001 (robust training)\n";
    return is_input_error(e.kind()) ? kExitInputError : kExitNumericalError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lrcal::cli
