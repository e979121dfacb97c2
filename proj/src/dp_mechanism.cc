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

#include "bernstein/dp_mechanism.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

#include "bernstein/errors.h"

namespace bernstein {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckScaleInputs(double sensitivity, int k, int ell, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw BudgetError("epsilon must be a positive finite number");
  }
  if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity must be finite and non-negative");
  }
  if (k < 0 || ell < 1) throw DomainError("scale needs k >= 0 and ell >= 1");
}

double LogInverseBeta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("beta must lie in (0, 1)");
  }
  return std::log(1.0 / beta);
}

int EffectiveOrder(const SmoothClass& c, int h) {
  if (h < 1) throw DomainError("Bernstein order h must be >= 1");
  return c.max_order > 0 ? std::min(h, c.max_order) : h;
}

}  // namespace

void PrivacyBudget::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw BudgetError("epsilon must be a positive finite number");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw BudgetError("delta must lie in [0, 1)");
  }
}

void AccuracyTarget::Validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (alpha && !(*alpha >= 0.0)) throw DomainError("alpha must be >= 0");
}

std::string SmoothnessName(const SmoothnessClass& c) {
  return std::visit(
      Overloaded{
          [](const SmoothClass& s) {
            return s.max_order > 0 ? "smooth(max_order=" + std::to_string(s.max_order) + ")"
                                   : std::string("smooth");
          },
          [](const HoelderClass& s) {
            std::ostringstream out;
            out << "hoelder(gamma=" << s.gamma << ", L=" << s.L << ")";
            return out.str();
          },
          [](const LinearClass&) { return std::string("linear"); }},
      c);
}

PointFunction TargetFunction::Bind(const Dataset& dataset) const {
  if (dataset.ell() != ell) {
    std::ostringstream msg;
    msg << "target '" << name << "' expects ell=" << ell << ", dataset has ell="
        << dataset.ell();
    throw ShapeError(msg.str());
  }
  if (n != 0 && dataset.size() != n) {
    std::ostringstream msg;
    msg << "target '" << name << "' sensitivity is stated for n=" << n
        << " records, dataset has " << dataset.size();
    throw PreconditionError(msg.str());
  }
  if (!bind) throw ConfigError("target '" + name + "' has no evaluator");
  return bind(dataset);
}

double LaplaceScale(double sensitivity, int k, int ell, double epsilon) {
  CheckScaleInputs(sensitivity, k, ell, epsilon);
  return sensitivity * std::pow(static_cast<double>(k) + 1.0, ell) / epsilon;
}

double LaplaceScaleApprox(double sensitivity, int k, int ell, double epsilon,
                          double delta) {
  CheckScaleInputs(sensitivity, k, ell, epsilon);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw BudgetError("delta must lie in (0, 1) for the approximate variant");
  }
  const double points = std::pow(static_cast<double>(k) + 1.0, ell);
  return 2.0 * sensitivity * std::sqrt(2.0 * points * std::log(1.0 / delta)) /
         epsilon;
}

double PerturbationScale(double sensitivity, int k, int ell,
                         const PrivacyBudget& budget) {
  budget.Validate();
  return budget.delta == 0.0
             ? LaplaceScale(sensitivity, k, ell, budget.epsilon)
             : LaplaceScaleApprox(sensitivity, k, ell, budget.epsilon,
                                  budget.delta);
}

double SampleLaplace(double scale, Rng& rng) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw DomainError("Laplace scale must be finite and non-negative");
  }
  if (scale == 0.0) return 0.0;
  const double u = UniformOpen(rng) - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

int ChooseK(const TargetFunction& target, double epsilon, double beta, int h) {
  if (!(epsilon > 0.0)) throw BudgetError("epsilon must be positive");
  const double log_inv_beta = LogInverseBeta(beta);
  if (std::holds_alternative<LinearClass>(target.smoothness)) return 1;
  if (target.sensitivity == 0.0) {
    throw DegenerateInputError(
        "zero sensitivity: every k gives the same noise; choose k explicitly");
  }
  if (!(target.sensitivity > 0.0)) throw DomainError("sensitivity must be >= 0");

  const double base = epsilon / (target.sensitivity * log_inv_beta);
  const double exponent = std::visit(
      Overloaded{[&](const SmoothClass& c) {
                   return 1.0 / (EffectiveOrder(c, h) + target.ell);
                 },
                 [&](const HoelderClass& c) {
                   return 2.0 / (c.gamma + 2.0 * target.ell);
                 },
                 [](const LinearClass&) { return 0.0; }},
      target.smoothness);
  const double k = std::floor(std::pow(base, exponent));
  if (k > static_cast<double>(std::numeric_limits<int>::max())) {
    throw CapacityError("chosen cover size does not fit in an int");
  }
  return std::max(1, static_cast<int>(k));
}

double PredictedErrorBound(const TargetFunction& target, double epsilon,
                           double beta, int h) {
  if (!(epsilon > 0.0)) throw BudgetError("epsilon must be positive");
  const double a = target.sensitivity * LogInverseBeta(beta) / epsilon;
  const double ell = target.ell;
  return std::visit(
      Overloaded{[&](const SmoothClass& c) {
                   const double order = EffectiveOrder(c, h);
                   return std::pow(a, order / (ell + order));
                 },
                 [&](const HoelderClass& c) {
                   return std::pow(a, c.gamma / (2.0 * ell + c.gamma));
                 },
                 [&](const LinearClass&) { return a; }},
      target.smoothness);
}

Synopsis PerturbLattice(const CoefficientField& exact, double sensitivity,
                        int h, const PrivacyBudget& budget,
                        std::uint64_t seed) {
  const LatticeGrid& grid = exact.grid();
  BasisParams params{grid.k(), h, grid.ell()};
  params.Validate();
  const double lambda =
      PerturbationScale(sensitivity, grid.k(), grid.ell(), budget);

  Rng rng(seed);
  std::vector<double> noisy(exact.values().begin(), exact.values().end());
  for (double& v : noisy) v += SampleLaplace(lambda, rng);

  return Synopsis{params, CoefficientField(grid, std::move(noisy)), lambda,
                  budget, sensitivity, seed};
}

Synopsis Sanitize(const TargetFunction& target, const Dataset& dataset,
                  const BasisParams& params, const PrivacyBudget& budget,
                  std::uint64_t seed) {
  budget.Validate();
  params.Validate();
  if (params.ell != target.ell) {
    throw ShapeError("basis dimension does not match the target dimension");
  }
  // Fail on capacity before touching the data.
  LatticeGrid grid(params.k, params.ell);
  (void)grid;
  const PointFunction f = target.Bind(dataset);
  const CoefficientField exact = Approximate(f, params);
  return PerturbLattice(exact, target.sensitivity, params.h, budget, seed);
}

double EvaluateSynopsis(const Synopsis& synopsis, const BasisTable& table,
                        std::span<const double> y) {
  if (!(table.params() == synopsis.params)) {
    std::ostringstream msg;
    msg << "basis table (k=" << table.params().k << ", h=" << table.params().h
        << ", ell=" << table.params().ell << ") does not match synopsis (k="
        << synopsis.params.k << ", h=" << synopsis.params.h
        << ", ell=" << synopsis.params.ell << ")";
    throw ShapeError(msg.str());
  }
  return EvaluateTensor(synopsis.noisy_values, table, y);
}

std::size_t NearestLatticeIndex(const LatticeGrid& grid,
                                std::span<const double> y) {
  if (static_cast<int>(y.size()) != grid.ell()) {
    throw ShapeError("query point dimension does not match the lattice");
  }
  std::vector<int> nu(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] >= 0.0 && y[i] <= 1.0)) {
      throw DomainError("query coordinate outside [0,1]");
    }
    // ceil(t - 1/2) rounds half-integers down.
    const double t = y[i] * grid.k();
    nu[i] = std::clamp(static_cast<int>(std::ceil(t - 0.5)), 0, grid.k());
  }
  return grid.FlatIndex(nu);
}

double BaselineEvaluate(const Synopsis& synopsis, std::span<const double> y) {
  const LatticeGrid& grid = synopsis.noisy_values.grid();
  return synopsis.noisy_values.values()[NearestLatticeIndex(grid, y)];
}

}  // namespace bernstein
