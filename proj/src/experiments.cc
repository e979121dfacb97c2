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

#include "bernstein/experiments.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "bernstein/dataset_io.h"
#include "bernstein/errors.h"
#include "bernstein/learner_registry.h"
#include "bernstein/rng.h"

namespace bernstein {
namespace {

using nlohmann::json;

std::size_t GridSize(int m, int ell) {
  std::size_t size = 1;
  for (int i = 0; i < ell; ++i) size *= static_cast<std::size_t>(m);
  return size;
}

// Calls fn(flat, point) for every point of the uniform m^ell grid, last axis
// fastest.
template <typename Fn>
void ForEachGridPoint(int m, int ell, Fn&& fn) {
  const std::vector<double> axis = UniformAxis(m);
  std::vector<int> idx(ell, 0);
  std::vector<double> y(ell, 0.0);
  const std::size_t total = GridSize(m, ell);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int a = 0; a < ell; ++a) y[a] = axis[idx[a]];
    fn(flat, std::span<const double>(y));
    for (int a = ell - 1; a >= 0; --a) {
      if (++idx[a] < m) break;
      idx[a] = 0;
    }
  }
}

double MaxAbsDifference(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

Eigen::VectorXd JsonVector(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ConfigError(std::string(what) + " entries must be numbers");
    }
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd JsonMatrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(std::string(what) + " must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXd m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::VectorXd row = JsonVector(j[r], what);
    if (row.size() != rows) throw ConfigError(std::string(what) + " must be square");
    m.row(r) = row.transpose();
  }
  return m;
}

std::string CellName(double epsilon, int h) {
  std::ostringstream out;
  out << "epsilon=" << epsilon << " h=" << h;
  return out.str();
}

}  // namespace

// --- Synthetic data --------------------------------------------------------

Dataset GenerateMixtureData(std::size_t n,
                            std::span<const MixtureComponent> components,
                            std::uint64_t seed, int ell) {
  if (components.empty()) throw ConfigError("mixture needs at least one component");
  if (ell < 1) throw ConfigError("ell must be at least 1");
  if (n == 0) throw ConfigError("n must be positive");
  double total = 0.0;
  std::vector<double> weights;
  for (const auto& c : components) {
    if (!(c.weight >= 0.0)) throw ConfigError("mixture weights must be nonnegative");
    if (!(c.variance > 0.0)) throw ConfigError("mixture variances must be positive");
    total += c.weight;
    weights.push_back(c.weight);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("mixture weights must sum to 1");
  }

  Rng rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::normal_distribution<double> normal;
  Dataset data(ell, LabelKind::kNone);
  std::vector<double> x(ell);
  for (std::size_t i = 0; i < n; ++i) {
    const MixtureComponent& c = components[pick(rng)];
    const double sd = std::sqrt(c.variance);
    for (double& v : x) v = std::clamp(c.mean + sd * normal(rng), 0.0, 1.0);
    data.Add(x);
  }
  return data;
}

Dataset GenerateTwoClassGaussian(std::size_t n_per_class,
                                 const std::vector<Eigen::VectorXd>& means,
                                 const std::vector<Eigen::MatrixXd>& covariances,
                                 std::uint64_t seed) {
  if (means.size() != 2 || covariances.size() != 2) {
    throw ConfigError("two-class data needs exactly two means and covariances");
  }
  if (n_per_class == 0) throw ConfigError("n_per_class must be positive");
  const auto ell = means[0].size();
  if (ell < 1 || means[1].size() != ell) {
    throw ConfigError("class means must have equal, positive dimension");
  }
  std::vector<Eigen::MatrixXd> factors;
  for (const auto& cov : covariances) {
    if (cov.rows() != ell || cov.cols() != ell) {
      throw ConfigError("covariance shape does not match the means");
    }
    if (!cov.isApprox(cov.transpose(), 1e-12)) {
      throw ConfigError("covariance must be symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      throw ConfigError("covariance must be positive definite");
    }
    factors.push_back(llt.matrixL());
  }

  Rng rng(seed);
  std::normal_distribution<double> normal;
  Dataset data(static_cast<int>(ell), LabelKind::kBinary);
  Eigen::VectorXd z(ell);
  std::vector<double> x(ell);
  for (int c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < n_per_class; ++i) {
      for (Eigen::Index a = 0; a < ell; ++a) z[a] = normal(rng);
      const Eigen::VectorXd draw = means[c] + factors[c] * z;
      for (Eigen::Index a = 0; a < ell; ++a) x[a] = std::clamp(draw[a], 0.0, 1.0);
      data.Add(x, c == 0 ? 1.0 : -1.0);
    }
  }
  return data;
}

// --- Utility ---------------------------------------------------------------

int DefaultGridResolution(int k) { return std::max(201, 10 * k + 1); }

std::vector<double> EvaluateOnGrid(const PointFunction& f, int m, int ell) {
  if (m < 2) throw ConfigError("grid resolution must be at least 2");
  std::vector<double> values(GridSize(m, ell));
  ForEachGridPoint(m, ell, [&](std::size_t flat, std::span<const double> y) {
    values[flat] = f(y);
  });
  return values;
}

double SupError(const PointFunction& f_true, const PointFunction& f_released,
                int m, int ell) {
  if (m < 2) throw ConfigError("grid resolution must be at least 2");
  double worst = 0.0;
  ForEachGridPoint(m, ell, [&](std::size_t, std::span<const double> y) {
    worst = std::max(worst, std::abs(f_true(y) - f_released(y)));
  });
  return worst;
}

std::vector<double> BaselineOnGrid(const Synopsis& synopsis, int m) {
  const LatticeGrid& grid = synopsis.noisy_values.grid();
  const LatticeGrid axis_grid(grid.k(), 1);
  std::vector<int> nearest;
  for (double t : UniformAxis(m)) {
    nearest.push_back(static_cast<int>(NearestLatticeIndex(axis_grid, {&t, 1})));
  }
  const int ell = grid.ell();
  const auto values = synopsis.noisy_values.values();
  std::vector<double> out(GridSize(m, ell));
  std::vector<int> idx(ell, 0), nu(ell, 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    for (int a = 0; a < ell; ++a) nu[a] = nearest[idx[a]];
    out[flat] = values[grid.FlatIndex(nu)];
    for (int a = ell - 1; a >= 0; --a) {
      if (++idx[a] < m) break;
      idx[a] = 0;
    }
  }
  return out;
}

double NearestRankQuantile(std::vector<double> values, double q) {
  if (values.empty()) throw ConfigError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  const auto rank = static_cast<std::size_t>(
      std::clamp(std::ceil(q * n - 1e-12), 1.0, n));
  return values[rank - 1];
}

void ExperimentSpec::Validate() const {
  if (!learner.is_object()) throw ConfigError("learner must be an object");
  if (epsilon_grid.empty()) throw ConfigError("epsilon grid is empty");
  if (h_grid.empty()) throw ConfigError("h grid is empty");
  for (double e : epsilon_grid) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw ConfigError("epsilon grid values must be positive");
    }
  }
  for (int h : h_grid) {
    if (h < 1) throw ConfigError("h grid values must be at least 1");
  }
  if (k && *k < 1) throw ConfigError("k must be at least 1");
  if (repeats < 1) throw ConfigError("repeats must be at least 1");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0,1)");
  if (!(delta >= 0.0 && delta < 1.0)) throw ConfigError("delta must lie in [0,1)");
  if (grid_resolution != 0 && grid_resolution < 2) {
    throw ConfigError("grid resolution must be at least 2");
  }
  if (sensitivity_override && !(*sensitivity_override >= 0.0)) {
    throw ConfigError("sensitivity override must be nonnegative");
  }
}

Dataset MakeExperimentData(const ExperimentSpec& spec) {
  const json& p = spec.data_params;
  try {
    if (spec.data_generator == "mixture") {
      std::vector<MixtureComponent> components;
      for (const json& c : p.at("components")) {
        components.push_back({c.at("mean").get<double>(),
                              c.at("variance").get<double>(),
                              c.at("weight").get<double>()});
      }
      return GenerateMixtureData(p.at("n").get<std::size_t>(), components,
                                 spec.data_seed, p.value("ell", 1));
    }
    if (spec.data_generator == "two_class_gaussian") {
      std::vector<Eigen::VectorXd> means;
      std::vector<Eigen::MatrixXd> covariances;
      for (const json& m : p.at("means")) means.push_back(JsonVector(m, "means"));
      for (const json& c : p.at("covariances")) {
        covariances.push_back(JsonMatrix(c, "covariances"));
      }
      return GenerateTwoClassGaussian(p.at("n_per_class").get<std::size_t>(),
                                      means, covariances, spec.data_seed);
    }
    if (spec.data_generator == "file") {
      return ReadDatasetFile(p.at("path").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ConfigError("bad data parameters: " + std::string(e.what()));
  }
  throw ConfigError("unknown data generator '" + spec.data_generator + "'");
}

const CellAggregate& ExperimentReport::Find(const std::string& method,
                                            double epsilon, int h) const {
  for (const auto& a : aggregates) {
    if (a.method == method && a.epsilon == epsilon && a.h == h) return a;
  }
  throw ConfigError("no aggregate for " + method + " " + CellName(epsilon, h));
}

ExperimentReport RunUtilityExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  return RunUtilityExperiment(spec, MakeExperimentData(spec));
}

ExperimentReport RunUtilityExperiment(const ExperimentSpec& spec,
                                      const Dataset& dataset) {
  spec.Validate();
  TargetFunction target = MakeTarget(spec.learner, dataset.ell(), dataset.size());
  if (spec.sensitivity_override) target.sensitivity = *spec.sensitivity_override;
  const int ell = dataset.ell();

  ExperimentReport report;
  report.beta = spec.beta;

  PointFunction f;
  std::string bind_failure;
  try {
    f = target.Bind(dataset);
  } catch (const Error& e) {
    bind_failure = e.what();
  }

  std::map<int, CoefficientField> exact_by_k;
  std::map<int, std::vector<double>> truth_by_m;
  const std::size_t cells_per_eps = spec.h_grid.size();

  for (std::size_t ei = 0; ei < spec.epsilon_grid.size(); ++ei) {
    for (std::size_t hi = 0; hi < cells_per_eps; ++hi) {
      const double eps = spec.epsilon_grid[ei];
      const int h = spec.h_grid[hi];
      const std::uint64_t cell = ei * cells_per_eps + hi;
      int k = spec.k.value_or(0);
      double lambda = 0.0;
      std::vector<double> mech_errors, base_errors;
      try {
        if (!bind_failure.empty()) throw TrainingError(bind_failure, 0.0);
        if (!spec.k) k = ChooseK(target, eps, spec.beta, h);
        const BasisParams params{k, h, ell};
        params.Validate();
        const BasisTable table = BasisTable::Build(params);
        const int m = spec.grid_resolution ? spec.grid_resolution
                                           : DefaultGridResolution(k);
        auto exact_it = exact_by_k.find(k);
        if (exact_it == exact_by_k.end()) {
          exact_it = exact_by_k.emplace(k, Approximate(f, {k, 1, ell})).first;
        }
        auto truth_it = truth_by_m.find(m);
        if (truth_it == truth_by_m.end()) {
          truth_it = truth_by_m.emplace(m, EvaluateOnGrid(f, m, ell)).first;
        }
        const std::vector<double> axis = UniformAxis(m);
        const PrivacyBudget budget{eps, spec.delta};
        lambda = PerturbationScale(target.sensitivity, k, ell, budget);
        for (int r = 0; r < spec.repeats; ++r) {
          const Synopsis syn =
              PerturbLattice(exact_it->second, target.sensitivity, h, budget,
                             DeriveSeed(spec.seed, cell, static_cast<std::uint64_t>(r)));
          mech_errors.push_back(MaxAbsDifference(
              truth_it->second, EvaluateTensorOnGrid(syn.noisy_values, table, axis)));
          base_errors.push_back(
              MaxAbsDifference(truth_it->second, BaselineOnGrid(syn, m)));
        }
      } catch (const Error& e) {
        report.failures.push_back(CellName(eps, h) + ": " + e.what());
        mech_errors.clear();
        base_errors.clear();
      }

      const bool failed = mech_errors.empty();
      for (const char* method : {"mechanism", "baseline"}) {
        const auto& errors =
            std::string(method) == "mechanism" ? mech_errors : base_errors;
        CellAggregate agg{method, eps, h, k, lambda, spec.repeats, 0.0, 0.0, failed};
        for (int r = 0; r < spec.repeats; ++r) {
          report.rows.push_back(
              {method, eps, h, k, r, lambda,
               failed ? std::numeric_limits<double>::quiet_NaN() : errors[r],
               failed});
        }
        if (failed) {
          agg.mean = agg.quantile = std::numeric_limits<double>::quiet_NaN();
        } else {
          double sum = 0.0;
          for (double e : errors) sum += e;
          agg.mean = sum / static_cast<double>(errors.size());
          agg.quantile = NearestRankQuantile(errors, 1.0 - spec.beta);
        }
        report.aggregates.push_back(agg);
      }
    }
  }
  return report;
}

// --- Concentration ---------------------------------------------------------

std::vector<TailRow> ConcentrationTailCheck(int k, int h, int ell,
                                            double lambda, int trials,
                                            std::span<const double> taus,
                                            std::uint64_t seed,
                                            int grid_resolution) {
  if (trials < 10000) throw ConfigError("tail check needs at least 10^4 trials");
  if (ell < 1 || ell > 2) throw ConfigError("tail check supports ell in {1, 2}");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("lambda must be a nonnegative number");
  }
  const BasisParams params{k, h, ell};
  params.Validate();
  const BasisTable table = BasisTable::Build(params);
  const std::vector<double> axis = UniformAxis(grid_resolution);
  const Eigen::MatrixXd basis = IteratedBasisMatrix(table, axis);

  const LatticeGrid grid(k, ell);
  std::vector<double> z(grid.size());
  std::vector<std::size_t> exceed(taus.size(), 0);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    for (double& v : z) v = SampleLaplace(lambda, rng);
    double peak = 0.0;
    for (double v : ContractTensor(z, ell, basis)) peak = std::max(peak, std::abs(v));
    for (std::size_t i = 0; i < taus.size(); ++i) {
      if (peak >= taus[i]) ++exceed[i];
    }
  }

  const double c = std::pow(std::pow(2.0, h) - 1.0, ell);
  std::vector<TailRow> rows;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    TailRow row;
    row.tau = taus[i];
    row.tail = static_cast<double>(exceed[i]) / trials;
    row.bound = lambda > 0.0 ? std::exp(-taus[i] / (c * lambda))
                             : (taus[i] > 0.0 ? 0.0 : 1.0);
    row.standard_error = std::sqrt(row.tail * (1.0 - row.tail) / trials);
    row.flagged = row.tail > row.bound + 3.0 * row.standard_error;
    rows.push_back(row);
  }
  return rows;
}

// --- Lower bound -----------------------------------------------------------

double LowerBoundWitness::Evaluate(std::size_t j, std::span<const double> y) const {
  const auto& d = databases.at(j);
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) acc += coefficients[i] * d[i];
  for (double v : y) acc += v;
  return eta * acc;
}

double LowerBoundWitness::Sensitivity() const {
  const auto [lo, hi] = std::minmax_element(coefficients.begin(), coefficients.end());
  return eta * (*hi - *lo);
}

LowerBoundWitness BuildLowerBoundWitness(int V, double epsilon, double eta,
                                         int ell, std::uint64_t seed) {
  if (V < 0) throw ConfigError("V must be nonnegative");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) throw ConfigError("eta must be positive");
  if (ell < 1) throw ConfigError("ell must be at least 1");
  const double cells = std::pow(static_cast<double>(V) + 9.0, ell);
  if (cells > 1e7) throw CapacityError("witness domain exceeds 10^7 cells");

  LowerBoundWitness w;
  w.V = V;
  w.epsilon = epsilon;
  w.eta = eta;
  w.ell = ell;
  w.c = static_cast<int>(std::floor(1.0 / epsilon));
  w.n = V + w.c;
  w.N = static_cast<std::size_t>(cells);
  w.coefficients.assign(w.N, 1);
  for (int t = 0; t < 8; ++t) w.coefficients[w.N - 8 + t] = t + 1;
  for (int j = 1; j <= 8; ++j) {
    std::vector<int> d(w.N, 0);
    for (int i = 0; i < V; ++i) d[i] = 1;
    d[w.N - 9 + j] += w.c;
    w.databases.push_back(std::move(d));
  }

  auto fail = [](const std::string& what) {
    throw ConstructionError("lower-bound witness: " + what);
  };
  for (const auto& d : w.databases) {
    long total = 0;
    for (int v : d) {
      if (v < 0) fail("negative histogram entry");
      total += v;
    }
    if (total != w.n) fail("database size differs from n");
  }
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      long dist = 0;
      for (std::size_t i = 0; i < w.N; ++i) {
        dist += std::abs(w.databases[a][i] - w.databases[b][i]);
      }
      if (dist != 2L * w.c) fail("pairwise L1 distance differs from 2c");
    }
  }
  Rng rng(seed);
  std::vector<double> y(ell);
  const double tol = 1e-9 * eta * (w.n + 8.0 * w.c + ell + 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    for (double& v : y) v = UniformOpen(rng);
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        if (std::abs(w.Evaluate(a, y) - w.Evaluate(b, y)) < w.c * eta - tol) {
          fail("separation below c * eta");
        }
      }
    }
  }
  if (std::abs(w.Sensitivity() - 7.0 * eta) > 1e-12 * eta) fail("S(F) != 7 eta");
  return w;
}

}  // namespace bernstein
