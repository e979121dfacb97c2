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

#include "bernstein/learners.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "bernstein/errors.h"

namespace bernstein {
namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double StdNormalPdf(double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

void RequireLabels(const Dataset& dataset, LabelKind kind, const char* who) {
  if (kind == LabelKind::kBinary &&
      dataset.label_kind() != LabelKind::kBinary) {
    throw PreconditionError(std::string(who) + " requires binary labels");
  }
  if (kind == LabelKind::kReal && dataset.label_kind() == LabelKind::kNone) {
    throw PreconditionError(std::string(who) + " requires labels");
  }
}

Eigen::MatrixXd GramMatrix(const KernelSpec& kernel, const Dataset& dataset) {
  const auto n = static_cast<Eigen::Index>(dataset.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = kernel(dataset.point(static_cast<std::size_t>(i)),
                                       dataset.point(static_cast<std::size_t>(j)));
    }
  }
  return gram;
}

double Sigmoid(double t) {
  return t >= 0.0 ? 1.0 / (1.0 + std::exp(-t))
                  : std::exp(t) / (1.0 + std::exp(t));
}

// log(1 + exp(-t)) without overflow.
double LogLoss(double t) {
  return t > 0.0 ? std::log1p(std::exp(-t)) : -t + std::log1p(std::exp(t));
}

double Loss(LossKind kind, double label, double f) {
  switch (kind) {
    case LossKind::kHinge:
      return std::max(0.0, 1.0 - label * f);
    case LossKind::kLogistic:
      return LogLoss(label * f);
    case LossKind::kSquare:
      return (label - f) * (label - f);
  }
  return 0.0;
}

// dL/df for the differentiable losses.
double LossDerivative(LossKind kind, double label, double f) {
  if (kind == LossKind::kLogistic) return -label * Sigmoid(-label * f);
  return 2.0 * (f - label);
}

KernelPredictor TrainHingeDualCoordinateAscent(const ErmConfig& config,
                                               const Dataset& dataset,
                                               const Eigen::MatrixXd& gram) {
  const auto n = static_cast<Eigen::Index>(dataset.size());
  const double upper = config.C / static_cast<double>(n);
  Eigen::VectorXd labels(n);
  for (Eigen::Index i = 0; i < n; ++i) labels[i] = dataset.label(static_cast<std::size_t>(i));

  // Dual: max sum(alpha) - 1/2 alpha^T Q alpha, 0 <= alpha <= C/n, with
  // Q_ij = l_i l_j K_ij. `margin` caches f(d_i) = (K (alpha .* l))_i.
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd margin = Eigen::VectorXd::Zero(n);
  double gap = std::numeric_limits<double>::infinity();
  int epoch = 0;
  for (; epoch < config.max_iterations; ++epoch) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double grad = labels[i] * margin[i] - 1.0;
      const double qii = gram(i, i);
      double next;
      if (qii > 1e-14) {
        next = std::clamp(alpha[i] - grad / qii, 0.0, upper);
      } else {
        next = grad < 0.0 ? upper : (grad > 0.0 ? 0.0 : alpha[i]);
      }
      const double delta = next - alpha[i];
      if (delta != 0.0) {
        alpha[i] = next;
        margin += (delta * labels[i]) * gram.col(i);
      }
    }
    // Duality gap: primal(w(alpha)) - dual(alpha).
    double hinge = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      hinge += std::max(0.0, 1.0 - labels[i] * margin[i]);
    }
    const double quad = alpha.cwiseProduct(labels).dot(margin);
    const double primal = config.C / static_cast<double>(n) * hinge + 0.5 * quad;
    const double dual = alpha.sum() - 0.5 * quad;
    gap = primal - dual;
    if (gap <= config.tolerance) break;
  }
  if (!(gap <= config.tolerance)) {
    std::ostringstream msg;
    msg << "hinge-loss dual coordinate ascent did not converge in "
        << config.max_iterations << " epochs (duality gap " << gap << ")";
    throw TrainingError(msg.str(), gap);
  }

  KernelPredictor predictor;
  predictor.kernel = config.kernel;
  predictor.ell = dataset.ell();
  predictor.coefficients.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    predictor.coefficients[static_cast<std::size_t>(i)] = alpha[i] * labels[i];
  }
  predictor.residual = gap;
  predictor.iterations = epoch + 1;
  return predictor;
}

KernelPredictor TrainFunctionalGradientDescent(const ErmConfig& config,
                                               const Dataset& dataset,
                                               const Eigen::MatrixXd& gram) {
  const auto n = static_cast<Eigen::Index>(dataset.size());
  const double scale = config.C / static_cast<double>(n);
  // Smoothness of the objective in the RKHS: 1 + (C/n) L'' lambda_max(K),
  // lambda_max bounded by the largest absolute row sum.
  const double curvature = config.loss == LossKind::kSquare ? 2.0 : 0.25;
  const double lambda_max = gram.cwiseAbs().rowwise().sum().maxCoeff();
  const double step = 1.0 / (1.0 + scale * curvature * lambda_max);

  Eigen::VectorXd labels(n);
  for (Eigen::Index i = 0; i < n; ++i) labels[i] = dataset.label(static_cast<std::size_t>(i));

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd grad(n);
  double norm = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < config.max_iterations; ++it) {
    for (Eigen::Index i = 0; i < n; ++i) {
      grad[i] = scale * LossDerivative(config.loss, labels[i], f[i]) + beta[i];
    }
    // RKHS norm of the functional gradient sum_j grad_j K(., d_j).
    const Eigen::VectorXd kg = gram * grad;
    norm = std::sqrt(std::max(0.0, grad.dot(kg)));
    if (norm <= config.tolerance) break;
    beta -= step * grad;
    f -= step * kg;
  }
  if (!(norm <= config.tolerance)) {
    std::ostringstream msg;
    msg << "gradient descent did not converge in " << config.max_iterations
        << " iterations (gradient norm " << norm << ")";
    throw TrainingError(msg.str(), norm);
  }

  KernelPredictor predictor;
  predictor.kernel = config.kernel;
  predictor.ell = dataset.ell();
  predictor.coefficients.assign(beta.data(), beta.data() + n);
  predictor.residual = norm;
  predictor.iterations = it;
  return predictor;
}

}  // namespace

// --- KDE -------------------------------------------------------------------

KdeConfig KdeConfig::Isotropic(double bandwidth, int ell) {
  if (!(bandwidth > 0.0)) throw ConfigError("KDE bandwidth must be positive");
  return KdeConfig{bandwidth * bandwidth * Eigen::MatrixXd::Identity(ell, ell)};
}

void KdeConfig::Validate() const {
  const auto& h = bandwidth_matrix;
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw ConfigError("KDE bandwidth matrix must be square and non-empty");
  }
  if (!h.isApprox(h.transpose(), 1e-12) || !h.allFinite()) {
    throw ConfigError("KDE bandwidth matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(h);
  if (llt.info() != Eigen::Success || !(h.determinant() > 0.0)) {
    throw ConfigError("KDE bandwidth matrix must be positive definite");
  }
}

double KdeSensitivity(const KdeConfig& config, std::size_t n) {
  config.Validate();
  if (n == 0) throw ConfigError("record count must be positive");
  const double ell = static_cast<double>(config.bandwidth_matrix.rows());
  return 1.0 / (static_cast<double>(n) *
                std::sqrt(std::pow(2.0 * std::numbers::pi, ell) *
                          config.bandwidth_matrix.determinant()));
}

TargetFunction KdeTarget(const KdeConfig& config, int ell, std::size_t n) {
  config.Validate();
  if (config.bandwidth_matrix.rows() != ell) {
    throw ConfigError("KDE bandwidth matrix does not match ell");
  }
  TargetFunction target;
  target.name = "kde";
  target.ell = ell;
  target.n = n;
  target.sensitivity = KdeSensitivity(config, n);
  target.smoothness = SmoothClass{};

  const Eigen::MatrixXd precision = config.bandwidth_matrix.inverse();
  const double norm = std::sqrt(std::pow(2.0 * std::numbers::pi, ell) *
                                config.bandwidth_matrix.determinant());
  target.bind = [precision, norm, ell](const Dataset& dataset) -> PointFunction {
    dataset.Validate();
    auto data = std::make_shared<const Dataset>(dataset);
    return [data, precision, norm, ell](std::span<const double> y) {
      Eigen::VectorXd diff(ell);
      double sum = 0.0;
      for (std::size_t i = 0; i < data->size(); ++i) {
        const auto d = data->point(i);
        for (int a = 0; a < ell; ++a) diff[a] = y[a] - d[a];
        sum += std::exp(-0.5 * diff.dot(precision * diff));
      }
      return sum / (norm * static_cast<double>(data->size()));
    };
  };
  return target;
}

// --- Priestley-Chao --------------------------------------------------------

void PcRegressionConfig::Validate() const {
  if (!(bandwidth > 0.0)) throw ConfigError("Priestley-Chao bandwidth must be positive");
  if (!(label_bound > 0.0)) throw ConfigError("label bound B must be positive");
  if (!(gap_constant > 0.0)) throw ConfigError("gap constant c must be positive");
}

double PcRegressionSensitivity(const PcRegressionConfig& config, std::size_t n) {
  config.Validate();
  if (n == 0) throw ConfigError("record count must be positive");
  return 4.0 * config.label_bound * config.gap_constant /
         (static_cast<double>(n) * config.bandwidth) * StdNormalPdf(0.0);
}

void ValidatePcDataset(const PcRegressionConfig& config, const Dataset& dataset) {
  dataset.Validate();
  if (dataset.ell() != 1) throw PreconditionError("Priestley-Chao needs ell = 1");
  RequireLabels(dataset, LabelKind::kReal, "Priestley-Chao regression");
  const std::size_t n = dataset.size();
  if (n < 2) throw PreconditionError("Priestley-Chao needs at least 2 records");
  const double max_gap = config.gap_constant / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(dataset.label(i)) > config.label_bound) {
      throw PreconditionError("record " + std::to_string(i) +
                                  " has a label outside [-B, B]",
                              i);
    }
    if (i == 0) continue;
    const double gap = dataset.point(i)[0] - dataset.point(i - 1)[0];
    if (gap < 0.0) {
      throw PreconditionError(
          "abscissae are not sorted at record " + std::to_string(i), i);
    }
    if (gap > max_gap * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "gap d[" << i << "] - d[" << i - 1 << "] = " << gap
          << " exceeds c/n = " << max_gap;
      throw PreconditionError(msg.str(), i);
    }
  }
}

TargetFunction PcRegressionTarget(const PcRegressionConfig& config,
                                  std::size_t n) {
  TargetFunction target;
  target.name = "pc_regression";
  target.ell = 1;
  target.n = n;
  target.sensitivity = PcRegressionSensitivity(config, n);
  target.smoothness = SmoothClass{};
  target.bind = [config](const Dataset& dataset) -> PointFunction {
    ValidatePcDataset(config, dataset);
    // (weight_i, d_i) for i >= 2 with weight_i = (d_i - d_{i-1}) l_i / b.
    auto terms = std::make_shared<std::vector<std::pair<double, double>>>();
    for (std::size_t i = 1; i < dataset.size(); ++i) {
      const double gap = dataset.point(i)[0] - dataset.point(i - 1)[0];
      terms->emplace_back(gap * dataset.label(i) / config.bandwidth,
                          dataset.point(i)[0]);
    }
    const double b = config.bandwidth;
    return [terms, b](std::span<const double> y) {
      double sum = 0.0;
      for (const auto& [w, d] : *terms) sum += w * StdNormalPdf((y[0] - d) / b);
      return sum;
    };
  };
  return target;
}

// --- Naive Bayes -----------------------------------------------------------

void NaiveBayesConfig::Validate() const {
  if (likelihood == NbLikelihood::kKde && !(bandwidth > 0.0)) {
    throw ConfigError("naive Bayes KDE bandwidth must be positive");
  }
  if (!(variance_floor > 0.0)) throw ConfigError("variance floor must be positive");
}

double NaiveBayesSensitivity(const NaiveBayesConfig& config, int ell,
                             std::size_t n) {
  config.Validate();
  if (n == 0) throw ConfigError("record count must be positive");
  const double nd = static_cast<double>(n);
  if (config.likelihood == NbLikelihood::kKde) {
    return 2.0 * (1.0 / nd + (std::pow(2.0, ell) - 1.0) * kInvSqrt2Pi /
                                 (nd * config.bandwidth));
  }
  return 2.0 * std::pow(2.0 * std::numbers::pi * config.variance_floor,
                        -0.5 * ell);
}

TargetFunction NaiveBayesTarget(const NaiveBayesConfig& config, int ell,
                                std::size_t n) {
  TargetFunction target;
  target.name = "naive_bayes";
  target.ell = ell;
  target.n = n;
  target.sensitivity = NaiveBayesSensitivity(config, ell, n);
  target.smoothness = SmoothClass{};
  target.bind = [config, ell](const Dataset& dataset) -> PointFunction {
    dataset.Validate();
    RequireLabels(dataset, LabelKind::kBinary, "naive Bayes");

    struct ClassModel {
      double prior = 0.0;
      std::vector<double> points;  // row-major, for KDE
      std::vector<double> mean, variance;  // per axis, for the parametric form
      std::size_t count = 0;
    };
    auto models = std::make_shared<std::array<ClassModel, 2>>();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      ClassModel& m = (*models)[dataset.label(i) > 0 ? 0 : 1];
      const auto p = dataset.point(i);
      m.points.insert(m.points.end(), p.begin(), p.end());
      ++m.count;
    }
    if ((*models)[0].count == 0 || (*models)[1].count == 0) {
      throw DegenerateInputError("naive Bayes needs both classes in the dataset");
    }
    for (ClassModel& m : *models) {
      m.prior = static_cast<double>(m.count) / static_cast<double>(dataset.size());
      m.mean.assign(ell, 0.0);
      m.variance.assign(ell, 0.0);
      for (std::size_t j = 0; j < m.count; ++j) {
        for (int a = 0; a < ell; ++a) m.mean[a] += m.points[j * ell + a];
      }
      for (int a = 0; a < ell; ++a) m.mean[a] /= static_cast<double>(m.count);
      for (std::size_t j = 0; j < m.count; ++j) {
        for (int a = 0; a < ell; ++a) {
          const double d = m.points[j * ell + a] - m.mean[a];
          m.variance[a] += d * d;
        }
      }
      for (int a = 0; a < ell; ++a) {
        m.variance[a] = std::max(config.variance_floor,
                                 m.variance[a] / static_cast<double>(m.count));
      }
    }

    return [models, config, ell](std::span<const double> y) {
      double joint[2];
      for (int c = 0; c < 2; ++c) {
        const ClassModel& m = (*models)[c];
        double like = 1.0;
        for (int a = 0; a < ell; ++a) {
          double p = 0.0;
          if (config.likelihood == NbLikelihood::kKde) {
            for (std::size_t j = 0; j < m.count; ++j) {
              p += StdNormalPdf((y[a] - m.points[j * ell + a]) / config.bandwidth);
            }
            p /= static_cast<double>(m.count) * config.bandwidth;
          } else {
            const double sd = std::sqrt(m.variance[a]);
            p = StdNormalPdf((y[a] - m.mean[a]) / sd) / sd;
          }
          like *= p;
        }
        joint[c] = m.prior * like;
      }
      return joint[0] - joint[1];
    };
  };
  return target;
}

// --- Kernel ERM ------------------------------------------------------------

double KernelSpec::operator()(std::span<const double> x,
                              std::span<const double> y) const {
  double acc = 0.0;
  if (kind == KernelKind::kLinear) {
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::exp(-acc / (2.0 * sigma * sigma));
}

double KernelSpec::SupDiagonal(int ell) const {
  return kind == KernelKind::kLinear ? static_cast<double>(ell) : 1.0;
}

void ErmConfig::Validate() const {
  if (!(C > 0.0)) throw ConfigError("ERM trade-off C must be positive");
  if (kernel.kind == KernelKind::kRbf && !(kernel.sigma > 0.0)) {
    throw ConfigError("RBF kernel width sigma must be positive");
  }
  if (!(label_bound > 0.0)) throw ConfigError("label bound must be positive");
  if (!(tolerance > 0.0) || max_iterations < 1) {
    throw ConfigError("solver tolerance and iteration budget must be positive");
  }
}

double KernelPredictor::operator()(std::span<const double> y) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    acc += coefficients[i] *
           kernel(y, std::span<const double>(centers.data() + i * ell, ell));
  }
  return acc;
}

KernelPredictor TrainKernelErm(const ErmConfig& config, const Dataset& dataset) {
  config.Validate();
  dataset.Validate();
  RequireLabels(dataset,
                config.loss == LossKind::kSquare ? LabelKind::kReal
                                                 : LabelKind::kBinary,
                "kernel ERM");
  if (config.loss == LossKind::kSquare) {
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (std::abs(dataset.label(i)) > config.label_bound) {
        throw PreconditionError(
            "record " + std::to_string(i) + " has a label beyond label_bound", i);
      }
    }
  }
  const Eigen::MatrixXd gram = GramMatrix(config.kernel, dataset);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-8) {
    throw ConfigError("kernel Gram matrix is not positive semi-definite");
  }

  KernelPredictor predictor =
      config.loss == LossKind::kHinge
          ? TrainHingeDualCoordinateAscent(config, dataset, gram)
          : TrainFunctionalGradientDescent(config, dataset, gram);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto p = dataset.point(i);
    predictor.centers.insert(predictor.centers.end(), p.begin(), p.end());
  }
  return predictor;
}

double ErmObjective(const ErmConfig& config, const Dataset& dataset,
                    std::span<const double> coefficients) {
  const Eigen::MatrixXd gram = GramMatrix(config.kernel, dataset);
  const auto n = static_cast<Eigen::Index>(dataset.size());
  const Eigen::Map<const Eigen::VectorXd> beta(coefficients.data(), n);
  const Eigen::VectorXd f = gram * beta;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    loss += Loss(config.loss, dataset.label(static_cast<std::size_t>(i)), f[i]);
  }
  return config.C / static_cast<double>(n) * loss + 0.5 * beta.dot(f);
}

double ErmLipschitz(const ErmConfig& config, int ell) {
  config.Validate();
  if (config.loss != LossKind::kSquare) return 1.0;
  // ||w||^2 / 2 <= objective(0) <= C B^2, so sup|f| <= B sqrt(2 C kappa).
  const double kappa = config.kernel.SupDiagonal(ell);
  const double b = config.label_bound;
  return 2.0 * (b + b * std::sqrt(2.0 * config.C * kappa));
}

double ErmSensitivity(const ErmConfig& config, int ell, std::size_t n) {
  if (n == 0) throw ConfigError("record count must be positive");
  return ErmLipschitz(config, ell) * config.C / static_cast<double>(n) *
         config.kernel.SupDiagonal(ell);
}

TargetFunction ErmTarget(const ErmConfig& config, int ell, std::size_t n) {
  TargetFunction target;
  target.name = "erm";
  target.ell = ell;
  target.n = n;
  target.sensitivity = ErmSensitivity(config, ell, n);
  if (config.kernel.kind == KernelKind::kLinear) {
    target.smoothness = LinearClass{};
  } else {
    target.smoothness = SmoothClass{};
  }
  target.bind = [config](const Dataset& dataset) -> PointFunction {
    auto predictor =
        std::make_shared<const KernelPredictor>(TrainKernelErm(config, dataset));
    return [predictor](std::span<const double> y) { return (*predictor)(y); };
  };
  return target;
}

// --- Logistic regression ---------------------------------------------------

void LogisticConfig::Validate() const {
  if (!(C > 0.0)) throw ConfigError("logistic regression C must be positive");
  if (!(tolerance > 0.0) || max_iterations < 1) {
    throw ConfigError("solver tolerance and iteration budget must be positive");
  }
}

double LogisticObjective(const LogisticConfig& config, const Dataset& dataset,
                         const Eigen::VectorXd& w) {
  double loss = 0.0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto d = dataset.point(i);
    const double margin =
        w.dot(Eigen::Map<const Eigen::VectorXd>(d.data(), dataset.ell()));
    loss += LogLoss(dataset.label(i) * margin);
  }
  return config.C / static_cast<double>(dataset.size()) * loss + 0.5 * w.squaredNorm();
}

Eigen::VectorXd TrainLogisticRegression(const LogisticConfig& config,
                                        const Dataset& dataset) {
  config.Validate();
  dataset.Validate();
  dataset.ValidateUnitBall();
  RequireLabels(dataset, LabelKind::kBinary, "logistic regression");

  const int ell = dataset.ell();
  const double scale = config.C / static_cast<double>(dataset.size());
  // Hessian <= (1 + C/4) I because ||d_i|| <= 1.
  const double step = 1.0 / (1.0 + config.C / 4.0);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ell);
  Eigen::VectorXd grad(ell);
  double norm = std::numeric_limits<double>::infinity();
  for (int it = 0; it < config.max_iterations; ++it) {
    grad = w;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      const auto d = dataset.point(i);
      const Eigen::Map<const Eigen::VectorXd> x(d.data(), ell);
      const double l = dataset.label(i);
      grad -= (scale * l * Sigmoid(-l * w.dot(x))) * x;
    }
    norm = grad.norm();
    if (norm <= config.tolerance) return w;
    w -= step * grad;
  }
  std::ostringstream msg;
  msg << "logistic regression did not converge in " << config.max_iterations
      << " iterations (gradient norm " << norm << ")";
  throw TrainingError(msg.str(), norm);
}

double LogisticSensitivity(const LogisticConfig& config, int ell, std::size_t n) {
  config.Validate();
  if (n == 0) throw ConfigError("record count must be positive");
  const double root_ell = std::sqrt(static_cast<double>(ell));
  const double nd = static_cast<double>(n);
  return config.output == LogisticOutput::kMargin
             ? 2.0 * config.C * root_ell / nd
             : config.C * root_ell / (2.0 * nd);
}

TargetFunction LogisticRegressionTarget(const LogisticConfig& config, int ell,
                                        std::size_t n) {
  TargetFunction target;
  target.name = "logistic";
  target.ell = ell;
  target.n = n;
  target.sensitivity = LogisticSensitivity(config, ell, n);
  if (config.output == LogisticOutput::kMargin) {
    target.smoothness = LinearClass{};
  } else {
    target.smoothness = SmoothClass{};
  }
  target.bind = [config](const Dataset& dataset) -> PointFunction {
    const Eigen::VectorXd w = TrainLogisticRegression(config, dataset);
    const bool sigmoid = config.output == LogisticOutput::kSigmoid;
    return [w, sigmoid](std::span<const double> y) {
      const double margin =
          w.dot(Eigen::Map<const Eigen::VectorXd>(y.data(), w.size()));
      return sigmoid ? Sigmoid(margin) : margin;
    };
  };
  return target;
}

}  // namespace bernstein
