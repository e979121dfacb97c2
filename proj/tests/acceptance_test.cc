// Copyright 2026 The Bernstein Mechanism Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance binary: one PASS/FAIL line per criterion, tolerances pinned here.
// Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernstein/bernstein_core.h"
#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"
#include "bernstein/errors.h"
#include "bernstein/experiments.h"
#include "bernstein/learners.h"
#include "bernstein/rng.h"
#include "sensitivity_oracle.h"

namespace bernstein {
namespace {

using test_support::BothClasses;
using test_support::BruteForceSensitivity;
using test_support::InUnitBall;
using test_support::Pool;
using test_support::RandomDataset;
using test_support::SortedIfAdmissible;

// --- Pinned tolerances -----------------------------------------------------

constexpr double kPartitionTol = 1e-10;
constexpr double kFixedPointTol = 1e-10;
constexpr double kSmoothSlopeSlack = 0.3;
constexpr double kHoelderConstant = 1.5;
constexpr int kTailTrials = 100000;
constexpr double kTailStandardErrors = 3.0;
constexpr int kNoiseDraws = 100000;
constexpr double kNoiseStdRelTol = 0.05;
constexpr double kLogRatioSlack = 1e-9;
constexpr double kSensitivityRelSlack = 1e-12;
constexpr double kSensitivityAbsSlack = 1e-6;  // iterative solvers
constexpr int kUtilityRepeats = 200;
constexpr double kRateSlopeTol = 0.25;
constexpr int kWitnessConfigs = 50;
constexpr double kSignAgreement = 0.90;
constexpr int kSvmRepeats = 20;

// Reference KDE workload: two-component mixture, n = 5000, b = 0.1.
const MixtureComponent kMixture[] = {{0.5, 0.02, 0.4}, {0.75, 0.005, 0.6}};
constexpr std::size_t kMixtureN = 5000;
constexpr double kKdeBandwidth = 0.1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

ExperimentSpec KdeSpec() {
  ExperimentSpec spec;
  spec.learner = {{"id", "kde"}, {"bandwidth", kKdeBandwidth}};
  spec.repeats = kUtilityRepeats;
  return spec;
}

Dataset MixtureData() { return GenerateMixtureData(kMixtureN, kMixture, 1); }

// 1. Partition of unity and absolute-sum bound of the iterated basis.
Outcome BasisIdentities() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_sum = 0.0, worst_ratio = 0.0;
  for (int k = 1; k <= 50; ++k) {
    for (int h = 1; h <= 4; ++h) {
      const BasisTable t = BasisTable::Build({k, h, 1});
      const double cap = std::pow(2.0, h) - 1.0;
      for (int i = 0; i < 200; ++i) {
        const Eigen::VectorXd b = IteratedBasisVector(t, unit(rng));
        worst_sum = std::max(worst_sum, std::abs(b.sum() - 1.0));
        worst_ratio = std::max(worst_ratio, b.cwiseAbs().sum() / cap);
      }
    }
  }
  return {worst_sum <= kPartitionTol && worst_ratio <= 1.0 + kPartitionTol,
          Fmt("max |sum-1| = %.2e, max sum|b|/(2^h-1) = %.12f", worst_sum, worst_ratio)};
}

// 2. Zero-noise releases of random affine functions with h = 1.
Outcome LinearFixedPoint() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  double worst = 0.0;
  for (int ell : {1, 2}) {
    Dataset data(ell, LabelKind::kNone);
    data.Add(std::vector<double>(ell, 0.5));
    for (int k : {1, 2, 5, 20}) {
      std::vector<double> w(ell);
      for (double& v : w) v = coef(rng);
      const double c = coef(rng);
      const PointFunction f = [w, c](std::span<const double> y) {
        double acc = c;
        for (std::size_t a = 0; a < w.size(); ++a) acc += w[a] * y[a];
        return acc;
      };
      TargetFunction target;
      target.name = "affine";
      target.ell = ell;
      target.sensitivity = 0.0;
      target.smoothness = LinearClass{};
      target.bind = [f](const Dataset&) { return f; };
      const Synopsis s = Sanitize(target, data, {k, 1, ell}, {1.0, 0.0}, 9);
      const BasisTable t = BasisTable::Build(s.params);
      worst = std::max(worst, SupError(f, [&](std::span<const double> y) {
        return EvaluateSynopsis(s, t, y);
      }, ell == 1 ? 1001 : 101, ell));
    }
  }
  return {worst <= kFixedPointTol, Fmt("max sup-grid error %.2e", worst)};
}

double UnivariateSupError(const std::function<double(double)>& f, int k, int h) {
  const BasisParams p{k, h, 1};
  const auto field = Approximate([&](std::span<const double> y) { return f(y[0]); }, p);
  const auto axis = UniformAxis(2001);
  const auto values = EvaluateTensorOnGrid(field, BasisTable::Build(p), axis);
  double worst = 0.0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    worst = std::max(worst, std::abs(values[i] - f(axis[i])));
  }
  return worst;
}

// 3. Smooth rate k^-h for sin(3y), Hoelder rate for |y - 1/2|.
Outcome ApproximationRates() {
  bool pass = true;
  std::ostringstream detail;
  const std::vector<double> ks = {4, 8, 16, 32, 64};
  for (int h : {1, 2}) {
    std::vector<double> errors;
    for (double k : ks) {
      errors.push_back(UnivariateSupError([](double y) { return std::sin(3 * y); },
                                          static_cast<int>(k), h));
    }
    const double slope = LogLogSlope(ks, errors);
    pass &= slope <= -h + kSmoothSlopeSlack;
    detail << "h=" << h << " slope " << Fmt("%.3f", slope) << "; ";
  }
  double worst = 0.0;
  for (int k = 4; k <= 256; k *= 2) {
    const double err = UnivariateSupError([](double y) { return std::abs(y - 0.5); }, k, 1);
    worst = std::max(worst, err * std::sqrt(4.0 * k));
  }
  pass &= worst <= kHoelderConstant;
  detail << "max err*sqrt(4k) " << Fmt("%.3f", worst);
  return {pass, detail.str()};
}

// 4. Monte Carlo tails of the iterated-basis noise field.
Outcome Concentration() {
  struct Case {
    int k, h, ell;
  };
  bool pass = true;
  std::ostringstream detail;
  for (const Case c : {Case{8, 1, 1}, Case{8, 2, 1}, Case{4, 2, 2}}) {
    const double scale = std::pow(std::pow(2.0, c.h) - 1.0, c.ell);
    std::vector<double> taus;
    for (double m : {1.0, 2.0, 4.0, 6.0, 8.0}) taus.push_back(m * scale);
    const auto rows = ConcentrationTailCheck(c.k, c.h, c.ell, 1.0, kTailTrials, taus,
                                             DeriveSeed(4, c.k, c.h * 10 + c.ell));
    int flagged = 0;
    double worst_excess = -1.0;
    for (const TailRow& r : rows) {
      flagged += r.tail > r.bound + kTailStandardErrors * r.standard_error;
      worst_excess = std::max(worst_excess, r.tail - r.bound);
    }
    pass &= flagged == 0;
    detail << "(" << c.k << "," << c.h << "," << c.ell << "): " << flagged
           << " flagged, max tail-bound " << Fmt("%.2e", worst_excess) << "; ";
  }
  return {pass, detail.str()};
}

// 5. Noise standard deviation and the neighbouring-dataset density ratio.
Outcome NoiseCalibration() {
  const Dataset data = MixtureData();
  const TargetFunction target = KdeTarget(KdeConfig::Isotropic(kKdeBandwidth, 1), 1,
                                          data.size());
  const BasisParams p{9, 2, 1};
  const auto exact = Approximate(target.Bind(data), p);
  const double epsilon = 0.5;
  const double lambda = LaplaceScale(target.sensitivity, p.k, 1, epsilon);
  double s2 = 0.0;
  int count = 0;
  for (std::uint64_t r = 0; count < kNoiseDraws; ++r) {
    const Synopsis s = PerturbLattice(exact, target.sensitivity, p.h, {epsilon, 0.0},
                                      DeriveSeed(5, r));
    for (std::size_t i = 0; i < exact.values().size(); ++i) {
      const double z = s.noisy_values.values()[i] - exact.values()[i];
      s2 += z * z;
      ++count;
    }
  }
  const double rel = std::sqrt(s2 / count) / (lambda * std::numbers::sqrt2) - 1.0;

  // Laplace log-density ratio of the whole release is at most
  // sum_p |F(D,p) - F(D',p)| / lambda.
  const std::size_t n = 8;
  const TargetFunction small = KdeTarget(KdeConfig::Isotropic(kKdeBandwidth, 1), 1, n);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_ratio = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const double lam = LaplaceScale(small.sensitivity, k, 1, epsilon);
    for (int trial = 0; trial < 500; ++trial) {
      Dataset d(1, LabelKind::kNone);
      for (std::size_t i = 0; i < n; ++i) d.Add(std::vector<double>{unit(rng)});
      const double repl[] = {unit(rng)};
      const auto a = Approximate(small.Bind(d), {k, 1, 1});
      const auto b = Approximate(small.Bind(d.WithRecord(trial % n, repl)), {k, 1, 1});
      double ratio = 0.0;
      for (int i = 0; i <= k; ++i) ratio += std::abs(a.values()[i] - b.values()[i]) / lam;
      worst_ratio = std::max(worst_ratio, ratio);
    }
  }
  return {std::abs(rel) <= kNoiseStdRelTol && worst_ratio <= epsilon + kLogRatioSlack,
          Fmt("std/(lambda sqrt2) - 1 = %+.4f; max log-ratio %.6f (eps %.1f)", rel,
              worst_ratio, epsilon)};
}

// 6. Brute-force neighbour sensitivity against every declared bound.
Outcome SensitivitySoundness() {
  struct Check {
    std::string name;
    double brute;
    double declared;
    double abs_slack;
  };
  std::vector<Check> checks;
  auto add = [&](std::string name, const TargetFunction& t, const Dataset& d,
                 const std::vector<test_support::Record>& pool, int m,
                 const test_support::Normalizer& norm, double slack) {
    checks.push_back({std::move(name), BruteForceSensitivity(t, d, pool, m, norm),
                      t.sensitivity, slack});
  };
  const std::vector<std::optional<double>> none = {std::nullopt};
  const std::vector<std::optional<double>> signs = {1.0, -1.0};

  add("kde l=1 n=8", KdeTarget(KdeConfig::Isotropic(0.1, 1), 1, 8),
      RandomDataset(1, 8, LabelKind::kNone, 61), Pool(1, 41, none), 201, {}, 0);
  add("kde l=2 n=6", KdeTarget(KdeConfig::Isotropic(0.2, 2), 2, 6),
      RandomDataset(2, 6, LabelKind::kNone, 62), Pool(2, 9, none), 41, {}, 0);

  {
    const PcRegressionConfig c{0.1, 1.0, 2.0};
    std::mt19937_64 rng(63);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Dataset d(1, LabelKind::kReal);
    for (int i = 0; i < 8; ++i) {
      d.Add(std::vector<double>{(i + 0.5 * unit(rng)) / 8}, 2 * unit(rng) - 1);
    }
    add("pc_regression n=8", PcRegressionTarget(c, 8), d,
        Pool(1, 41, {-1.0, -0.5, 0.0, 0.5, 1.0}), 201,
        [c](const Dataset& x) { return SortedIfAdmissible(x, c); }, 0);
  }

  add("naive_bayes kde l=1 b=0.1 n=8",
      NaiveBayesTarget({0.1, NbLikelihood::kKde, 1e-6}, 1, 8),
      RandomDataset(1, 8, LabelKind::kBinary, 64), Pool(1, 41, signs), 201, BothClasses, 0);
  add("naive_bayes kde l=2 b=0.1 n=8",
      NaiveBayesTarget({0.1, NbLikelihood::kKde, 1e-6}, 2, 8),
      RandomDataset(2, 8, LabelKind::kBinary, 65), Pool(2, 11, signs), 41, BothClasses, 0);
  {
    // Clustered positives: moving the stray positive onto the cluster raises
    // the per-axis densities above one, where the product expansion breaks.
    const auto t = NaiveBayesTarget({0.1, NbLikelihood::kKde, 1e-6}, 2, 8);
    Dataset d(2, LabelKind::kBinary);
    for (int i = 0; i < 3; ++i) d.Add(std::vector<double>{0.5, 0.5}, 1.0);
    d.Add(std::vector<double>{1.0, 1.0}, 1.0);
    for (int i = 0; i < 4; ++i) d.Add(std::vector<double>{0.0, 0.0}, -1.0);
    const double moved[] = {0.5, 0.5};
    const auto a = EvaluateOnGrid(t.Bind(d), 101, 2);
    const auto b = EvaluateOnGrid(t.Bind(d.WithRecord(3, moved, 1.0)), 101, 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    checks.push_back({"naive_bayes kde l=2 b=0.1 n=8 clustered", worst, t.sensitivity, 0});
  }
  add("naive_bayes kde l=2 b=0.4 n=8",
      NaiveBayesTarget({0.4, NbLikelihood::kKde, 1e-6}, 2, 8),
      RandomDataset(2, 8, LabelKind::kBinary, 66), Pool(2, 11, signs), 41, BothClasses, 0);
  add("naive_bayes gaussian l=2 n=8",
      NaiveBayesTarget({0.1, NbLikelihood::kGaussianParametric, 1e-3}, 2, 8),
      RandomDataset(2, 8, LabelKind::kBinary, 67), Pool(2, 11, signs), 41, BothClasses, 0);

  for (LossKind loss : {LossKind::kHinge, LossKind::kLogistic, LossKind::kSquare}) {
    for (int ell : {1, 2}) {
      ErmConfig c;
      c.loss = loss;
      const bool square = loss == LossKind::kSquare;
      const auto pool = Pool(ell, ell == 1 ? 21 : 6,
                             square ? std::vector<std::optional<double>>{-1.0, 0.0, 1.0}
                                    : signs);
      add(std::string("erm ") + (loss == LossKind::kHinge      ? "hinge"
                                 : loss == LossKind::kLogistic ? "logistic"
                                                               : "square") +
              " l=" + std::to_string(ell) + " n=6",
          ErmTarget(c, ell, 6),
          RandomDataset(ell, 6, square ? LabelKind::kReal : LabelKind::kBinary, 70 + ell),
          pool, ell == 1 ? 101 : 21, {}, kSensitivityAbsSlack);
    }
  }

  for (auto output : {LogisticOutput::kMargin, LogisticOutput::kSigmoid}) {
    for (int ell : {1, 2}) {
      add(std::string("logistic ") +
              (output == LogisticOutput::kMargin ? "margin" : "sigmoid") +
              " l=" + std::to_string(ell) + " n=6",
          LogisticRegressionTarget({1.0, output}, ell, 6),
          RandomDataset(ell, 6, LabelKind::kBinary, 80 + ell, 1.0),
          Pool(ell, ell == 1 ? 21 : 8, signs), ell == 1 ? 101 : 21, InUnitBall,
          kSensitivityAbsSlack);
    }
  }

  bool pass = true;
  std::ostringstream detail;
  detail << "brute/declared:";
  for (const Check& c : checks) {
    const bool ok =
        c.brute <= c.declared * (1 + kSensitivityRelSlack) + c.abs_slack;
    pass &= ok;
    detail << (ok ? " " : " VIOLATED ") << c.name << " " << Fmt("%.3f", c.brute / c.declared)
           << ";";
  }
  return {pass, detail.str()};
}

// 7. Best h beats the piecewise-constant baseline at every epsilon.
Outcome UtilityDominance() {
  ExperimentSpec spec = KdeSpec();
  spec.epsilon_grid = {0.1, 0.3, 1.0, 3.0, 10.0};
  spec.h_grid = {1, 2, 3};
  spec.k = 20;
  spec.seed = 7;
  const ExperimentReport report = RunUtilityExperiment(spec, MixtureData());
  bool pass = report.ok();
  std::ostringstream detail;
  for (double eps : spec.epsilon_grid) {
    double mech = std::numeric_limits<double>::infinity();
    double base = std::numeric_limits<double>::infinity();
    for (int h : spec.h_grid) {
      mech = std::min(mech, report.Find("mechanism", eps, h).mean);
      base = std::min(base, report.Find("baseline", eps, h).mean);
    }
    pass &= mech < base;
    detail << Fmt("eps=%g: %.4f vs %.4f; ", eps, mech, base);
  }
  return {pass, detail.str()};
}

// 8. Error-vs-epsilon slope with automatic k.
Outcome RateScaling() {
  ExperimentSpec spec = KdeSpec();
  for (int i = 0; i < 7; ++i) spec.epsilon_grid.push_back(0.1 * std::pow(10.0, i / 2.0));
  spec.h_grid = {1, 2};
  spec.seed = 11;
  const ExperimentReport report = RunUtilityExperiment(spec, MixtureData());
  bool pass = report.ok();
  std::ostringstream detail;
  for (int h : spec.h_grid) {
    std::vector<double> means;
    for (double eps : spec.epsilon_grid) means.push_back(report.Find("mechanism", eps, h).mean);
    const double slope = LogLogSlope(spec.epsilon_grid, means);
    const double expected = -h / (1.0 + h);
    pass &= std::abs(slope - expected) <= kRateSlopeTol;
    detail << Fmt("h=%g slope %.3f (expected %.3f, k ", h, slope, expected)
           << report.Find("mechanism", spec.epsilon_grid.front(), h).k << ".."
           << report.Find("mechanism", spec.epsilon_grid.back(), h).k << "); ";
  }
  return {pass, detail.str()};
}

// 9. Lower-bound database family, re-verified independently.
Outcome LowerBoundWitnesses() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> v_dist(0, 200);
  std::uniform_real_distribution<double> log_eps(std::log(0.05), std::log(2.0));
  std::uniform_real_distribution<double> log_eta(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int good = 0;
  for (int i = 0; i < kWitnessConfigs; ++i) {
    const int V = v_dist(rng);
    const double eps = std::exp(log_eps(rng));
    const double eta = std::exp(log_eta(rng));
    const int ell = 1 + i % 2;
    try {
      const LowerBoundWitness w = BuildLowerBoundWitness(V, eps, eta, ell, i);
      const int c = static_cast<int>(std::floor(1.0 / eps));
      bool ok = w.databases.size() == 8 && w.c == c &&
                std::abs(w.Sensitivity() - 7 * eta) <= 1e-12 * eta;
      for (std::size_t a = 0; a < 8 && ok; ++a) {
        long total = 0;
        for (int x : w.databases[a]) total += x;
        ok &= total == w.n;
        for (std::size_t b = a + 1; b < 8 && ok; ++b) {
          long l1 = 0;
          for (std::size_t j = 0; j < w.N; ++j) {
            l1 += std::abs(w.databases[a][j] - w.databases[b][j]);
          }
          ok &= l1 == 2L * c;
          for (int t = 0; t < 20 && ok; ++t) {
            std::vector<double> y(ell);
            for (double& v : y) v = unit(rng);
            ok &= std::abs(w.Evaluate(a, y) - w.Evaluate(b, y)) >= c * eta * (1 - 1e-12);
          }
        }
      }
      good += ok;
    } catch (const Error&) {
    }
  }
  return {good == kWitnessConfigs,
          Fmt("%g/%g configurations verified", good, kWitnessConfigs)};
}

// 10. Private SVM decision signs agree with the non-private classifier.
Outcome SvmSignAgreement() {
  Eigen::MatrixXd cov_pos(2, 2), cov_neg(2, 2);
  cov_pos << 0.01, 0.0, 0.0, 0.01;
  cov_neg << 0.01, 0.008, 0.008, 0.015;
  Eigen::VectorXd mean_pos(2), mean_neg(2);
  mean_pos << 0.3, 0.5;
  mean_neg << 0.6, 0.4;
  const Dataset data =
      GenerateTwoClassGaussian(300, {mean_pos, mean_neg}, {cov_pos, cov_neg}, 10);
  ErmConfig config;
  config.C = 1.0;
  config.kernel.sigma = 1.0;
  const TargetFunction target = ErmTarget(config, 2, data.size());
  const double epsilon = 2.0;
  const int h = 2;
  const int k = ChooseK(target, epsilon, 0.05, h);
  const PointFunction f = target.Bind(data);
  const int m = 51;
  const std::vector<double> truth = EvaluateOnGrid(f, m, 2);
  const BasisParams p{k, h, 2};
  const BasisTable table = BasisTable::Build(p);
  const auto exact = Approximate(f, p);
  const auto axis = UniformAxis(m);
  double total = 0.0, worst = 1.0;
  for (int r = 0; r < kSvmRepeats; ++r) {
    const Synopsis s =
        PerturbLattice(exact, target.sensitivity, h, {epsilon, 0.0}, DeriveSeed(10, r));
    const auto released = EvaluateTensorOnGrid(s.noisy_values, table, axis);
    int agree = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      agree += (released[i] > 0) == (truth[i] > 0);
    }
    const double frac = static_cast<double>(agree) / truth.size();
    total += frac;
    worst = std::min(worst, frac);
  }
  const double mean = total / kSvmRepeats;
  return {mean >= kSignAgreement,
          Fmt("mean agreement %.4f (min %.4f), k=%g", mean, worst, k)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "basis identities", 5, BasisIdentities},
      {2, "linear fixed point", 1, LinearFixedPoint},
      {3, "approximation rates", 10, ApproximationRates},
      {4, "concentration tails", 120, Concentration},
      {5, "noise calibration", 60, NoiseCalibration},
      {6, "sensitivity soundness", 300, SensitivitySoundness},
      {7, "utility dominance over baseline", 600, UtilityDominance},
      {8, "rate scaling in epsilon", 600, RateScaling},
      {9, "lower-bound witness", 5, LowerBoundWitnesses},
      {10, "private SVM sign agreement", 600, SvmSignAgreement},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %d (%s): %s [%.2fs / %.0fs budget%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.name, out.detail.c_str(), secs, c.budget_seconds,
                in_time ? "" : ", OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace bernstein

int main() { return bernstein::Main(); }
