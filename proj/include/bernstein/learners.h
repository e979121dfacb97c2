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

// Target functions F(D, y) for the example learners, each paired with an
// analytic sensitivity bound and a smoothness class.

#ifndef BERNSTEIN_LEARNERS_H_
#define BERNSTEIN_LEARNERS_H_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"

namespace bernstein {

// ---------------------------------------------------------------------------
// Kernel density estimation with a Gaussian kernel of covariance H:
//   F(D, y) = (1/n) sum_i N(y - d_i; 0, H),  S(F) = 1 / (n sqrt((2 pi)^ell det H)).

struct KdeConfig {
  Eigen::MatrixXd bandwidth_matrix;

  // H = b^2 I.
  static KdeConfig Isotropic(double bandwidth, int ell);

  // Throws ConfigError unless H is square, symmetric and positive definite.
  void Validate() const;
};

double KdeSensitivity(const KdeConfig& config, std::size_t n);
TargetFunction KdeTarget(const KdeConfig& config, int ell, std::size_t n);

// ---------------------------------------------------------------------------
// Priestley-Chao kernel regression (ell = 1, standard Gaussian kernel K):
//   F(D, y) = (1/b) sum_{i>=2} (d_i - d_{i-1}) K((y - d_i)/b) l_i,
//   S(F) = 4 B c K(0) / (n b).

struct PcRegressionConfig {
  double bandwidth = 0.1;
  double label_bound = 1.0;
  // Public constant: consecutive sorted abscissae are at most c/n apart.
  double gap_constant = 1.0;

  void Validate() const;
};

double PcRegressionSensitivity(const PcRegressionConfig& config, std::size_t n);

// Requires n >= 2, abscissae sorted non-decreasingly, |l_i| <= B and
// d_i - d_{i-1} <= c/n. Throws PreconditionError naming the violating index.
void ValidatePcDataset(const PcRegressionConfig& config, const Dataset& dataset);

TargetFunction PcRegressionTarget(const PcRegressionConfig& config,
                                  std::size_t n);

// ---------------------------------------------------------------------------
// Two-class naive Bayes score
//   F(D, y) = Pr(+) prod_i p_+(y_i) - Pr(-) prod_i p_-(y_i)
// with relative-frequency priors and per-axis class-conditional likelihoods.
// Classify as +1 when F >= 0.

enum class NbLikelihood { kGaussianParametric, kKde };

struct NaiveBayesConfig {
  double bandwidth = 0.1;
  NbLikelihood likelihood = NbLikelihood::kKde;
  // Lower bound on the per-axis variance of the parametric likelihood.
  double variance_floor = 1e-6;

  void Validate() const;
};

// 2 (1/n + (2^ell - 1) / (n sqrt(2 pi) b)) for KDE likelihoods. The parametric
// variant reports the range bound 2 (2 pi variance_floor)^(-ell/2).
double NaiveBayesSensitivity(const NaiveBayesConfig& config, int ell,
                             std::size_t n);

TargetFunction NaiveBayesTarget(const NaiveBayesConfig& config, int ell,
                                std::size_t n);

inline int NaiveBayesPredict(double score) { return score >= 0.0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// Regularized kernel ERM
//   min_f (C/n) sum_i L(l_i, f(d_i)) + (1/2) ||f||_H^2,
// released in representer form f(y) = sum_i alpha_i l_i K(y, d_i) with
// S(F) = M C sup_y K(y, y) / n.

enum class LossKind { kHinge, kLogistic, kSquare };
enum class KernelKind { kRbf, kLinear };

struct KernelSpec {
  KernelKind kind = KernelKind::kRbf;
  // RBF: K(x, y) = exp(-||x - y||^2 / (2 sigma^2)).
  double sigma = 1.0;

  double operator()(std::span<const double> x, std::span<const double> y) const;
  // sup over [0,1]^ell of K(y, y).
  double SupDiagonal(int ell) const;
};

struct ErmConfig {
  double C = 1.0;
  LossKind loss = LossKind::kHinge;
  KernelSpec kernel;
  // Public bound on |l_i|; used for the square-loss Lipschitz constant.
  double label_bound = 1.0;
  // Duality gap (hinge) or RKHS gradient norm (logistic, square).
  double tolerance = 1e-9;
  int max_iterations = 200000;

  void Validate() const;
};

// Representer-form predictor: f(y) = sum_i coefficients[i] K(y, centers[i]),
// coefficients[i] = alpha_i l_i.
struct KernelPredictor {
  KernelSpec kernel;
  int ell = 1;
  std::vector<double> centers;
  std::vector<double> coefficients;
  // Final duality gap or gradient norm.
  double residual = 0.0;
  int iterations = 0;

  double operator()(std::span<const double> y) const;
};

// Throws TrainingError carrying the residual if max_iterations is exhausted.
KernelPredictor TrainKernelErm(const ErmConfig& config, const Dataset& dataset);

// (C/n) sum_i L(l_i, (K beta)_i) + (1/2) beta^T K beta.
double ErmObjective(const ErmConfig& config, const Dataset& dataset,
                    std::span<const double> coefficients);

// Local Lipschitz constant M of the loss on the admissible prediction range:
// 1 for hinge and logistic; 2 (B + B sqrt(2 C kappa)) for square loss.
double ErmLipschitz(const ErmConfig& config, int ell);

double ErmSensitivity(const ErmConfig& config, int ell, std::size_t n);

TargetFunction ErmTarget(const ErmConfig& config, int ell, std::size_t n);

// ---------------------------------------------------------------------------
// L2-regularized logistic regression with identity features:
//   min_w (C/n) sum_i log(1 + exp(-l_i <w, d_i>)) + (1/2) ||w||^2.
// Margin output <w, y> has S = 2 C sqrt(ell) / n (linear class);
// sigmoid output has S = C sqrt(ell) / (2n) (smooth class).

enum class LogisticOutput { kMargin, kSigmoid };

struct LogisticConfig {
  double C = 1.0;
  LogisticOutput output = LogisticOutput::kMargin;
  double tolerance = 1e-9;
  int max_iterations = 1000000;

  void Validate() const;
};

// Deterministic full-gradient descent to ||grad|| <= tolerance. Requires
// binary labels and feature norms <= 1.
Eigen::VectorXd TrainLogisticRegression(const LogisticConfig& config,
                                        const Dataset& dataset);

double LogisticObjective(const LogisticConfig& config, const Dataset& dataset,
                         const Eigen::VectorXd& w);

double LogisticSensitivity(const LogisticConfig& config, int ell, std::size_t n);

TargetFunction LogisticRegressionTarget(const LogisticConfig& config, int ell,
                                        std::size_t n);

}  // namespace bernstein

#endif  // BERNSTEIN_LEARNERS_H_
