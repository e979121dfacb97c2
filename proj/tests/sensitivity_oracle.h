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

// Exhaustive neighbour-replacement sensitivity oracle shared by the learner
// tests and the acceptance binary.

#ifndef BERNSTEIN_TESTS_SENSITIVITY_ORACLE_H_
#define BERNSTEIN_TESTS_SENSITIVITY_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"
#include "bernstein/errors.h"
#include "bernstein/experiments.h"
#include "bernstein/learners.h"

namespace bernstein::test_support {

struct Record {
  std::vector<double> x;
  std::optional<double> label;
};

// Maps a candidate neighbour to the dataset the learner actually sees, or
// nullopt when the candidate is outside the learner's admissible inputs.
using Normalizer = std::function<std::optional<Dataset>(const Dataset&)>;

// max over records i and replacements r of sup_grid |F(D) - F(D with i := r)|.
inline double BruteForceSensitivity(const TargetFunction& target, const Dataset& data,
                             const std::vector<Record>& pool, int m,
                             const Normalizer& normalize = {}) {
  const int ell = data.ell();
  const auto base = EvaluateOnGrid(target.Bind(data), m, ell);
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const Record& r : pool) {
      Dataset next = data.WithRecord(i, r.x, r.label);
      if (normalize) {
        auto fixed = normalize(next);
        if (!fixed) continue;
        next = std::move(*fixed);
      }
      const auto other = EvaluateOnGrid(target.Bind(next), m, ell);
      for (std::size_t p = 0; p < base.size(); ++p) {
        worst = std::max(worst, std::abs(base[p] - other[p]));
      }
    }
  }
  return worst;
}

inline std::vector<Record> Pool(int ell, int per_axis, std::vector<std::optional<double>> labels) {
  std::vector<Record> pool;
  const auto axis = UniformAxis(per_axis);
  std::vector<int> idx(ell, 0);
  while (true) {
    std::vector<double> x(ell);
    for (int a = 0; a < ell; ++a) x[a] = axis[idx[a]];
    for (const auto& l : labels) pool.push_back({x, l});
    int a = ell - 1;
    while (a >= 0 && ++idx[a] == per_axis) idx[a--] = 0;
    if (a < 0) break;
  }
  return pool;
}

inline Dataset RandomDataset(int ell, std::size_t n, LabelKind kind, std::uint64_t seed,
                      double max_norm = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Dataset d(ell, kind);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(ell);
    for (double& v : x) v = unit(rng);
    if (max_norm > 0.0) {
      double norm = 0;
      for (double v : x) norm += v * v;
      norm = std::sqrt(norm);
      if (norm > max_norm) for (double& v : x) v *= max_norm / norm;
    }
    std::optional<double> label;
    if (kind == LabelKind::kBinary) label = i % 2 == 0 ? 1.0 : -1.0;
    if (kind == LabelKind::kReal) label = 2 * unit(rng) - 1;
    d.Add(x, label);
  }
  return d;
}

inline std::optional<Dataset> SortedIfAdmissible(const Dataset& d,
                                          const PcRegressionConfig& config) {
  std::vector<std::size_t> order(d.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return d.point(a)[0] < d.point(b)[0];
  });
  Dataset sorted(1, LabelKind::kReal);
  for (auto i : order) sorted.Add(d.point(i), d.label(i));
  try {
    ValidatePcDataset(config, sorted);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return sorted;
}

inline std::optional<Dataset> BothClasses(const Dataset& d) {
  bool pos = false, neg = false;
  for (double l : d.labels()) (l > 0 ? pos : neg) = true;
  if (!pos || !neg) return std::nullopt;
  return d;
}

inline std::optional<Dataset> InUnitBall(const Dataset& d) {
  try {
    d.ValidateUnitBall();
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return d;
}

}  // namespace bernstein::test_support

#endif  // BERNSTEIN_TESTS_SENSITIVITY_ORACLE_H_
