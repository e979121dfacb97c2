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

#include "bernstein/bernstein_core.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "bernstein/errors.h"

namespace bernstein {
namespace {

// Above this degree binomial coefficients are formed in log space.
constexpr int kDirectBinomialMaxK = 60;

double BinomialDirect(int k, int nu) {
  nu = std::min(nu, k - nu);
  double c = 1.0;
  for (int i = 0; i < nu; ++i) {
    c = c * static_cast<double>(k - i) / static_cast<double>(i + 1);
  }
  return c;
}

double LogBinomial(int k, int nu) {
  return std::lgamma(k + 1.0) - std::lgamma(nu + 1.0) -
         std::lgamma(k - nu + 1.0);
}

void CheckUnitInterval(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    std::ostringstream msg;
    msg << "query coordinate " << y << " outside [0,1]";
    throw DomainError(msg.str());
  }
}

void CheckTableMatchesField(const CoefficientField& coeffs,
                            const BasisTable& table) {
  const BasisParams& p = table.params();
  if (coeffs.grid().k() != p.k || coeffs.grid().ell() != p.ell) {
    std::ostringstream msg;
    msg << "coefficient grid (k=" << coeffs.grid().k()
        << ", ell=" << coeffs.grid().ell() << ") does not match basis table (k="
        << p.k << ", ell=" << p.ell << ")";
    throw ShapeError(msg.str());
  }
}

}  // namespace

void BasisParams::Validate() const {
  if (k < 1 || h < 1 || ell < 1) {
    std::ostringstream msg;
    msg << "basis parameters must be positive (k=" << k << ", h=" << h
        << ", ell=" << ell << ")";
    throw DomainError(msg.str());
  }
}

LatticeGrid::LatticeGrid(int k, int ell) : k_(k), ell_(ell), size_(1) {
  if (k < 1 || ell < 1) {
    throw DomainError("lattice requires k >= 1 and ell >= 1");
  }
  for (int i = 0; i < ell; ++i) {
    if (size_ > kMaxPoints / static_cast<std::size_t>(k + 1)) {
      std::ostringstream msg;
      msg << "lattice (k+1)^ell = " << (k + 1) << "^" << ell
          << " exceeds the cap of " << kMaxPoints << " points";
      throw CapacityError(msg.str());
    }
    size_ *= static_cast<std::size_t>(k + 1);
  }
}

std::vector<int> LatticeGrid::MultiIndex(std::size_t flat) const {
  if (flat >= size_) throw DomainError("lattice index out of range");
  std::vector<int> nu(ell_);
  for (int axis = ell_ - 1; axis >= 0; --axis) {
    nu[axis] = static_cast<int>(flat % static_cast<std::size_t>(k_ + 1));
    flat /= static_cast<std::size_t>(k_ + 1);
  }
  return nu;
}

std::size_t LatticeGrid::FlatIndex(std::span<const int> nu) const {
  if (static_cast<int>(nu.size()) != ell_) {
    throw ShapeError("multi-index length does not match lattice dimension");
  }
  std::size_t flat = 0;
  for (int v : nu) {
    if (v < 0 || v > k_) throw DomainError("multi-index entry out of range");
    flat = flat * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(v);
  }
  return flat;
}

std::vector<double> LatticeGrid::Point(std::size_t flat) const {
  std::vector<int> nu = MultiIndex(flat);
  std::vector<double> p(ell_);
  for (int i = 0; i < ell_; ++i) p[i] = static_cast<double>(nu[i]) / k_;
  return p;
}

CoefficientField::CoefficientField(LatticeGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    std::ostringstream msg;
    msg << "coefficient field has " << values_.size() << " values, lattice has "
        << grid_.size() << " points";
    throw ShapeError(msg.str());
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("coefficient field value is not finite");
  }
}

double BernsteinBasis(int nu, int k, double y) {
  if (k < 1) throw DomainError("Bernstein degree k must be >= 1");
  if (nu < 0 || nu > k) {
    std::ostringstream msg;
    msg << "basis index " << nu << " outside [0," << k << "]";
    throw DomainError(msg.str());
  }
  CheckUnitInterval(y);
  if (k <= kDirectBinomialMaxK) {
    // std::pow(0.0, 0) == 1 gives the endpoint deltas.
    return std::min(1.0, BinomialDirect(k, nu) * std::pow(y, nu) *
                             std::pow(1.0 - y, k - nu));
  }
  if (y == 0.0) return nu == 0 ? 1.0 : 0.0;
  if (y == 1.0) return nu == k ? 1.0 : 0.0;
  const double log_b =
      LogBinomial(k, nu) + nu * std::log(y) + (k - nu) * std::log1p(-y);
  return std::min(1.0, std::exp(log_b));
}

Eigen::VectorXd BasisVector(int k, double y) {
  if (k < 1) throw DomainError("Bernstein degree k must be >= 1");
  CheckUnitInterval(y);
  Eigen::VectorXd v(k + 1);
  for (int nu = 0; nu <= k; ++nu) v[nu] = BernsteinBasis(nu, k, y);
  return v;
}

BasisTable BasisTable::Build(const BasisParams& params,
                             const TableLimits& limits) {
  params.Validate();
  if (params.k > limits.max_k || params.h > limits.max_h) {
    std::ostringstream msg;
    msg << "basis table (k=" << params.k << ", h=" << params.h
        << ") exceeds limits (k<=" << limits.max_k << ", h<=" << limits.max_h
        << ")";
    throw CapacityError(msg.str());
  }
  const std::size_t n = static_cast<std::size_t>(params.k) + 1;
  if ((static_cast<std::size_t>(params.h) + 2) * n * n > limits.max_entries) {
    throw CapacityError("basis table would exceed the configured memory limit");
  }

  BasisTable table;
  table.params_ = params;
  const int k = params.k;
  table.operator_.resize(k + 1, k + 1);
  for (int mu = 0; mu <= k; ++mu) {
    const double y = static_cast<double>(mu) / k;
    for (int nu = 0; nu <= k; ++nu) {
      table.operator_(mu, nu) = BernsteinBasis(nu, k, y);
    }
  }

  table.powers_.reserve(params.h);
  table.powers_.push_back(Eigen::MatrixXd::Identity(k + 1, k + 1));
  for (int i = 1; i < params.h; ++i) {
    table.powers_.push_back(table.powers_.back() * table.operator_);
  }

  // W = sum_{i=1..h} C(h,i) (-1)^(i-1) M^(i-1).
  table.iterated_ = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (int i = 1; i <= params.h; ++i) {
    const double sign = (i % 2 == 1) ? 1.0 : -1.0;
    table.iterated_ += sign * BinomialDirect(params.h, i) * table.powers_[i - 1];
  }
  return table;
}

Eigen::VectorXd IteratedBasisVector(const BasisTable& table, double y) {
  Eigen::VectorXd v = BasisVector(table.params().k, y);
  if (table.params().h == 1) return v;
  return table.iterated_operator().transpose() * v;
}

Eigen::MatrixXd IteratedBasisMatrix(const BasisTable& table,
                                    std::span<const double> ys) {
  const int k = table.params().k;
  Eigen::MatrixXd plain(static_cast<Eigen::Index>(ys.size()), k + 1);
  for (std::size_t r = 0; r < ys.size(); ++r) {
    plain.row(static_cast<Eigen::Index>(r)) = BasisVector(k, ys[r]).transpose();
  }
  if (table.params().h == 1) return plain;
  return plain * table.iterated_operator();
}

double EvaluateTensor(const CoefficientField& coeffs, const BasisTable& table,
                      std::span<const double> y) {
  CheckTableMatchesField(coeffs, table);
  const int ell = table.params().ell;
  const int k = table.params().k;
  if (static_cast<int>(y.size()) != ell) {
    std::ostringstream msg;
    msg << "query point has " << y.size() << " coordinates, expected " << ell;
    throw ShapeError(msg.str());
  }
  for (double c : y) CheckUnitInterval(c);

  // Contract the last axis first: the flat layout is row-major.
  std::vector<double> current(coeffs.values().begin(), coeffs.values().end());
  const std::size_t stride = static_cast<std::size_t>(k) + 1;
  for (int axis = ell - 1; axis >= 0; --axis) {
    const Eigen::VectorXd u = IteratedBasisVector(table, y[axis]);
    const std::size_t outer = current.size() / stride;
    std::vector<double> next(outer, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      double acc = 0.0;
      const double* row = current.data() + o * stride;
      for (std::size_t j = 0; j < stride; ++j) acc += row[j] * u[static_cast<Eigen::Index>(j)];
      next[o] = acc;
    }
    current.swap(next);
  }
  return current[0];
}

std::vector<double> ContractTensor(std::span<const double> values, int ell,
                                   const Eigen::MatrixXd& basis) {
  const std::size_t n_in = static_cast<std::size_t>(basis.cols());
  const std::size_t n_out = static_cast<std::size_t>(basis.rows());
  std::vector<std::size_t> dims(ell, n_in);
  std::vector<double> current(values.begin(), values.end());

  for (int axis = ell - 1; axis >= 0; --axis) {
    std::size_t outer = 1, inner = 1;
    for (int a = 0; a < axis; ++a) outer *= dims[a];
    for (int a = axis + 1; a < ell; ++a) inner *= dims[a];
    std::vector<double> next(outer * n_out * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t r = 0; r < n_out; ++r) {
        double* out = next.data() + (o * n_out + r) * inner;
        for (std::size_t j = 0; j < n_in; ++j) {
          const double w = basis(static_cast<Eigen::Index>(r),
                                 static_cast<Eigen::Index>(j));
          if (w == 0.0) continue;
          const double* in = current.data() + (o * n_in + j) * inner;
          for (std::size_t i = 0; i < inner; ++i) out[i] += w * in[i];
        }
      }
    }
    dims[axis] = n_out;
    current.swap(next);
  }
  return current;
}

std::vector<double> EvaluateTensorOnGrid(const CoefficientField& coeffs,
                                         const BasisTable& table,
                                         std::span<const double> axis_points) {
  CheckTableMatchesField(coeffs, table);
  const Eigen::MatrixXd basis = IteratedBasisMatrix(table, axis_points);
  return ContractTensor(coeffs.values(), table.params().ell, basis);
}

CoefficientField Approximate(const PointFunction& f, const BasisParams& params) {
  params.Validate();
  LatticeGrid grid(params.k, params.ell);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> p = grid.Point(i);
    const double v = f(p);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "target evaluated to " << v << " at lattice point (";
      for (std::size_t j = 0; j < p.size(); ++j) msg << (j ? ", " : "") << p[j];
      msg << ")";
      throw EvaluationError(msg.str(), std::move(p));
    }
    values[i] = v;
  }
  return CoefficientField(grid, std::move(values));
}

std::vector<double> UniformAxis(int m) {
  if (m < 2) throw DomainError("grid resolution must be >= 2");
  std::vector<double> axis(m);
  for (int i = 0; i < m; ++i) axis[i] = static_cast<double>(i) / (m - 1);
  axis.back() = 1.0;
  return axis;
}

}  // namespace bernstein
