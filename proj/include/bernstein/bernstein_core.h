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

// Bernstein basis polynomials, the iterated Bernstein operator and
// tensor-product evaluation over the unit cube [0,1]^ell.
//
// The univariate iterated basis of order h is
//
//   b^(h)_{nu,k}(y) = sum_{i=1..h} C(h,i) (-1)^(i-1) B_k^(i-1)(b_{nu,k}; y),
//
// and is evaluated through the (k+1)x(k+1) operator matrix
// M[mu][nu] = b_{nu,k}(mu/k): the row vector of plain basis values at y times
// W = sum_i C(h,i) (-1)^(i-1) M^(i-1) gives all k+1 iterated basis values.

#ifndef BERNSTEIN_BERNSTEIN_CORE_H_
#define BERNSTEIN_BERNSTEIN_CORE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bernstein {

// Lattice degree per axis (k), iteration order (h) and dimension (ell).
struct BasisParams {
  int k = 1;
  int h = 1;
  int ell = 1;

  // Throws DomainError unless k, h, ell >= 1.
  void Validate() const;

  friend bool operator==(const BasisParams&, const BasisParams&) = default;
};

struct TableLimits {
  int max_k = 10000;
  int max_h = 16;
  // Upper bound on the doubles held by the operator matrix, its h powers and
  // the combined iterated operator.
  std::size_t max_entries = std::size_t{1} << 28;
};

// The cover {0, 1/k, ..., 1}^ell, enumerated row-major with the last axis
// varying fastest.
class LatticeGrid {
 public:
  static constexpr std::size_t kMaxPoints = 100'000'000;

  // Throws DomainError for k < 1 or ell < 1, CapacityError when (k+1)^ell
  // exceeds kMaxPoints.
  LatticeGrid(int k, int ell);

  int k() const { return k_; }
  int ell() const { return ell_; }
  std::size_t size() const { return size_; }

  std::vector<int> MultiIndex(std::size_t flat) const;
  std::size_t FlatIndex(std::span<const int> nu) const;
  std::vector<double> Point(std::size_t flat) const;

  friend bool operator==(const LatticeGrid&, const LatticeGrid&) = default;

 private:
  int k_;
  int ell_;
  std::size_t size_;
};

// Real values attached to every lattice point, in grid enumeration order.
class CoefficientField {
 public:
  // Throws ShapeError on a length mismatch, DomainError on non-finite values.
  CoefficientField(LatticeGrid grid, std::vector<double> values);

  const LatticeGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }

 private:
  LatticeGrid grid_;
  std::vector<double> values_;
};

// Precomputed operator matrix M, its powers M^0..M^(h-1) and the combined
// iterated operator W. Immutable once built.
class BasisTable {
 public:
  // Throws CapacityError when k or h exceed `limits`.
  static BasisTable Build(const BasisParams& params,
                          const TableLimits& limits = {});

  const BasisParams& params() const { return params_; }
  const Eigen::MatrixXd& operator_matrix() const { return operator_; }
  const std::vector<Eigen::MatrixXd>& matrix_powers() const { return powers_; }
  const Eigen::MatrixXd& iterated_operator() const { return iterated_; }

 private:
  BasisTable() = default;

  BasisParams params_;
  Eigen::MatrixXd operator_;
  std::vector<Eigen::MatrixXd> powers_;
  Eigen::MatrixXd iterated_;
};

// C(k,nu) y^nu (1-y)^(k-nu), with 0^0 = 1. Throws DomainError unless
// 0 <= nu <= k, k >= 1 and y in [0,1].
double BernsteinBasis(int nu, int k, double y);

// (b_{0,k}(y), ..., b_{k,k}(y)).
Eigen::VectorXd BasisVector(int k, double y);

// (b^(h)_{0,k}(y), ..., b^(h)_{k,k}(y)) for the table's k and h.
Eigen::VectorXd IteratedBasisVector(const BasisTable& table, double y);

// Rows are IteratedBasisVector(table, ys[r]).
Eigen::MatrixXd IteratedBasisMatrix(const BasisTable& table,
                                    std::span<const double> ys);

// sum_nu coeffs[nu] prod_i b^(h)_{nu_i,k}(y_i).
// Throws ShapeError when the field, table and point disagree on k or ell.
double EvaluateTensor(const CoefficientField& coeffs, const BasisTable& table,
                      std::span<const double> y);

// Evaluates the tensor-product polynomial on the full grid axis_points^ell in
// row-major order (last axis fastest). Equivalent to calling EvaluateTensor
// at every grid point, at O(m (k+1)^ell) cost instead of O(m^ell (k+1)^ell).
std::vector<double> EvaluateTensorOnGrid(const CoefficientField& coeffs,
                                         const BasisTable& table,
                                         std::span<const double> axis_points);

// Applies `basis` (rows: evaluation points, cols: k+1) along every axis of a
// (k+1)^ell tensor of values.
std::vector<double> ContractTensor(std::span<const double> values, int ell,
                                   const Eigen::MatrixXd& basis);

using PointFunction = std::function<double(std::span<const double>)>;

// Samples f at every lattice point of (params.k, params.ell).
// Throws EvaluationError carrying the point when f returns a non-finite value.
CoefficientField Approximate(const PointFunction& f, const BasisParams& params);

// m >= 2 evenly spaced points 0, 1/(m-1), ..., 1.
std::vector<double> UniformAxis(int m);

}  // namespace bernstein

#endif  // BERNSTEIN_BERNSTEIN_CORE_H_
