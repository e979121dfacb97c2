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

// Desk-scale experiment harness: synthetic data, sup-norm utility of the
// mechanism against the nearest-lattice-point baseline, a Monte Carlo check of
// the noise-polynomial tail bound, and the lower-bound database family.

#ifndef BERNSTEIN_EXPERIMENTS_H_
#define BERNSTEIN_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"
#include "json.hpp"

namespace bernstein {

// --- Synthetic data --------------------------------------------------------

struct MixtureComponent {
  double mean = 0.5;
  double variance = 0.01;
  double weight = 1.0;
};

// n i.i.d. draws from the mixture (each coordinate of a draw uses the same
// component), clamped to [0,1]. Throws ConfigError unless the weights are
// nonnegative and sum to 1 (within 1e-9) and every variance is positive.
Dataset GenerateMixtureData(std::size_t n,
                            std::span<const MixtureComponent> components,
                            std::uint64_t seed, int ell = 1);

// n_per_class draws from N(means[0], covariances[0]) labelled +1 followed by
// n_per_class from N(means[1], covariances[1]) labelled -1, clamped to the
// unit cube. Throws ConfigError for a covariance that is not positive
// definite or shapes that disagree.
Dataset GenerateTwoClassGaussian(std::size_t n_per_class,
                                 const std::vector<Eigen::VectorXd>& means,
                                 const std::vector<Eigen::MatrixXd>& covariances,
                                 std::uint64_t seed);

// --- Utility ---------------------------------------------------------------

// Default sup-grid resolution per axis: max(201, 10k + 1).
int DefaultGridResolution(int k);

// max |f_true - f_released| over the uniform m^ell grid with endpoints. A lower
// estimate of the true sup. Throws ConfigError for m < 2.
double SupError(const PointFunction& f_true, const PointFunction& f_released,
                int m, int ell);

// Evaluates f on the uniform m^ell grid, row-major.
std::vector<double> EvaluateOnGrid(const PointFunction& f, int m, int ell);

// Nearest-lattice-point values of the synopsis on the uniform m^ell grid.
std::vector<double> BaselineOnGrid(const Synopsis& synopsis, int m);

struct ExperimentSpec {
  // Learner object as accepted by MakeTarget.
  nlohmann::json learner;
  // "mixture", "two_class_gaussian" or "file".
  std::string data_generator = "mixture";
  nlohmann::json data_params = nlohmann::json::object();
  std::uint64_t data_seed = 0;
  std::vector<double> epsilon_grid;
  std::vector<int> h_grid;
  // nullopt: ChooseK per (epsilon, h).
  std::optional<int> k;
  int repeats = 1;
  double beta = 0.05;
  double delta = 0.0;
  // 0: DefaultGridResolution(k).
  int grid_resolution = 0;
  std::uint64_t seed = 0;
  // Replaces the learner's analytic sensitivity (e.g. 0 for noise-free runs).
  std::optional<double> sensitivity_override;

  // Throws ConfigError.
  void Validate() const;
};

// Builds the dataset described by the spec's data fields.
Dataset MakeExperimentData(const ExperimentSpec& spec);

struct ExperimentRow {
  std::string method;  // "mechanism" or "baseline"
  double epsilon = 0.0;
  int h = 0;
  int k = 0;
  int repeat = 0;
  double lambda = 0.0;
  double sup_error = 0.0;
  bool failed = false;
};

struct CellAggregate {
  std::string method;
  double epsilon = 0.0;
  int h = 0;
  int k = 0;
  double lambda = 0.0;
  int count = 0;
  double mean = 0.0;
  // Nearest-rank (1 - beta) empirical quantile.
  double quantile = 0.0;
  bool failed = false;
};

struct ExperimentReport {
  double beta = 0.05;
  std::vector<ExperimentRow> rows;
  std::vector<CellAggregate> aggregates;
  // "epsilon=.. h=..: reason" for every failed cell.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  // Aggregate for (method, epsilon, h); throws ConfigError if absent.
  const CellAggregate& Find(const std::string& method, double epsilon,
                            int h) const;
};

// Cells are (epsilon, h) pairs in grid order, cell index = e * |h_grid| + hi.
// Repeat r of cell c draws its noise from DeriveSeed(seed, c, r); mechanism
// and baseline read the same noisy lattice. A cell whose setup throws is
// recorded as failed and the run continues.
ExperimentReport RunUtilityExperiment(const ExperimentSpec& spec,
                                      const Dataset& dataset);
ExperimentReport RunUtilityExperiment(const ExperimentSpec& spec);

// Nearest-rank quantile: the ceil(q n)-th smallest value.
double NearestRankQuantile(std::vector<double> values, double q);

// --- Concentration ---------------------------------------------------------

struct TailRow {
  double tau = 0.0;
  double tail = 0.0;
  double bound = 0.0;
  double standard_error = 0.0;
  // tail > bound + 3 standard errors.
  bool flagged = false;
};

// Empirical P[max_y |sum_nu Z_nu prod_i b^(h)_{nu_i,k}(y_i)| >= tau] with
// Z_nu i.i.d. Lap(lambda), max over a grid_resolution^ell grid, against
// exp(-tau / ((2^h - 1)^ell lambda)). Requires trials >= 10^4 and ell <= 2.
std::vector<TailRow> ConcentrationTailCheck(int k, int h, int ell,
                                            double lambda, int trials,
                                            std::span<const double> taus,
                                            std::uint64_t seed,
                                            int grid_resolution = 201);

// --- Lower bound -----------------------------------------------------------

// Histograms over X = {0, 1/(V+8), ..., 1}^ell (N = (V+9)^ell cells, indexed
// 0..N-1) and the linear query
//   F(D, y) = eta (sum_i coef_i d_i + <y, 1>),
// coef_i = 1 below the top eight cells, which carry 1..8. Database j
// (1..8) has one entry in each of cells 0..V-1 and c = floor(1/eps) entries
// in cell N-9+j.
struct LowerBoundWitness {
  int V = 0;
  double epsilon = 1.0;
  double eta = 1.0;
  int ell = 1;
  int c = 0;
  int n = 0;
  std::size_t N = 0;
  std::vector<int> coefficients;
  std::vector<std::vector<int>> databases;

  double Evaluate(std::size_t j, std::span<const double> y) const;
  // eta (max coef - min coef): the largest change from moving one entry.
  double Sensitivity() const;
};

// Builds the family and checks ||D_j||_1 = n, ||D_i - D_j||_1 = 2c,
// |F(D_i, y) - F(D_j, y)| >= c eta at 20 random y, and S(F) = 7 eta. Throws
// ConstructionError on any violation, ConfigError on bad arguments.
LowerBoundWitness BuildLowerBoundWitness(int V, double epsilon, double eta,
                                         int ell = 1, std::uint64_t seed = 0);

}  // namespace bernstein

#endif  // BERNSTEIN_EXPERIMENTS_H_
