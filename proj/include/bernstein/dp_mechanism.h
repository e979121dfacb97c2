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

// The Bernstein mechanism: evaluate a target F(D, .) on the lattice cover,
// perturb every lattice value with i.i.d. Laplace noise of scale
//
//   lambda = S(F) (k+1)^ell / epsilon                  (pure epsilon-DP)
//   lambda = 2 S(F) sqrt(2 (k+1)^ell ln(1/delta)) / epsilon   (epsilon,delta)
//
// and answer queries from the perturbed values alone by iterated Bernstein
// interpolation.

#ifndef BERNSTEIN_DP_MECHANISM_H_
#define BERNSTEIN_DP_MECHANISM_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "bernstein/bernstein_core.h"
#include "bernstein/dataset.h"
#include "bernstein/rng.h"

namespace bernstein {

struct PrivacyBudget {
  double epsilon = 1.0;
  // 0 means pure epsilon-DP.
  double delta = 0.0;

  // Throws BudgetError unless epsilon > 0 and 0 <= delta < 1.
  void Validate() const;
};

// (alpha, beta)-accuracy: with probability >= 1 - beta the sup error is at
// most alpha.
struct AccuracyTarget {
  double beta = 0.05;
  std::optional<double> alpha;

  void Validate() const;
};

// F(D, .) is (2h, T)-smooth for every h <= max_order; max_order == 0 means
// every order.
struct SmoothClass {
  int max_order = 0;
  double T = 0.0;
};

// F(D, .) is (gamma, L)-Hoelder continuous.
struct HoelderClass {
  double gamma = 1.0;
  double L = 1.0;
};

// F(D, .) is affine in the query point.
struct LinearClass {};

using SmoothnessClass = std::variant<SmoothClass, HoelderClass, LinearClass>;

std::string SmoothnessName(const SmoothnessClass& c);

// Oracle access to F together with its sensitivity bound S(F).
struct TargetFunction {
  std::string name;
  int ell = 1;
  // Record count the sensitivity is stated for; 0 when it does not depend on n.
  std::size_t n = 0;
  double sensitivity = 0.0;
  SmoothnessClass smoothness = SmoothClass{};
  // Fits whatever F needs on D and returns y -> F(D, y).
  std::function<PointFunction(const Dataset&)> bind;

  // Checks the dataset against ell and n, then calls bind.
  PointFunction Bind(const Dataset& dataset) const;
};

// The released object: perturbed lattice values plus public metadata. Holds
// no reference to the dataset it was computed from.
struct Synopsis {
  BasisParams params;
  CoefficientField noisy_values;
  double lambda = 0.0;
  PrivacyBudget budget;
  double sensitivity = 0.0;
  std::uint64_t rng_seed = 0;

  // Degenerate release with lambda = 0; accepted, but callers should warn.
  bool zero_sensitivity() const { return sensitivity == 0.0; }
};

// S (k+1)^ell / epsilon. Throws BudgetError for epsilon <= 0, DomainError for
// negative sensitivity or k < 0.
double LaplaceScale(double sensitivity, int k, int ell, double epsilon);

// 2 S sqrt(2 (k+1)^ell ln(1/delta)) / epsilon. Throws BudgetError unless
// 0 < delta < 1.
double LaplaceScaleApprox(double sensitivity, int k, int ell, double epsilon,
                          double delta);

// LaplaceScale when budget.delta == 0, LaplaceScaleApprox otherwise.
double PerturbationScale(double sensitivity, int k, int ell,
                         const PrivacyBudget& budget);

// One Lap(scale) draw by inverse CDF: u uniform on (-1/2, 1/2),
// return -scale sign(u) ln(1 - 2|u|). Scale 0 returns exactly 0 without
// consuming the stream.
double SampleLaplace(double scale, Rng& rng);

// Cover size balancing approximation and noise error:
//   smooth:  max(1, floor((eps / (S ln(1/beta)))^(1/(h+ell))))
//   Hoelder: max(1, floor((eps / (S ln(1/beta)))^(2/(gamma+2 ell))))
//   linear:  1
// `h` is the Bernstein order that will be used, capped at the class's
// max_order. Throws DegenerateInputError when S == 0.
int ChooseK(const TargetFunction& target, double epsilon, double beta, int h);

// Unit-constant dominant term of the accuracy guarantee, with
// a = S ln(1/beta) / eps: a^(h/(ell+h)), a^(gamma/(2 ell+gamma)) or a.
// Only meaningful as an order of magnitude, and only when k came from ChooseK.
double PredictedErrorBound(const TargetFunction& target, double epsilon,
                           double beta, int h);

// Adds i.i.d. Lap(lambda) noise to `exact`, drawing in canonical lattice order
// from a stream seeded with `seed`.
Synopsis PerturbLattice(const CoefficientField& exact, double sensitivity,
                        int h, const PrivacyBudget& budget, std::uint64_t seed);

// Full sanitization: bind F on the dataset, sample the lattice, perturb.
// Evaluation failures propagate; nothing partial is returned.
Synopsis Sanitize(const TargetFunction& target, const Dataset& dataset,
                  const BasisParams& params, const PrivacyBudget& budget,
                  std::uint64_t seed);

// Iterated Bernstein interpolation of the noisy values. Throws ShapeError
// when the table was built for other parameters.
double EvaluateSynopsis(const Synopsis& synopsis, const BasisTable& table,
                        std::span<const double> y);

// Index of the lattice point nearest to y in the max-norm, ties broken toward
// the smaller index on every axis.
std::size_t NearestLatticeIndex(const LatticeGrid& grid,
                                std::span<const double> y);

// Piecewise-constant baseline: the noisy value at the nearest lattice point.
double BaselineEvaluate(const Synopsis& synopsis, std::span<const double> y);

}  // namespace bernstein

#endif  // BERNSTEIN_DP_MECHANISM_H_
