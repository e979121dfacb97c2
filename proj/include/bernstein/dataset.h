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

#ifndef BERNSTEIN_DATASET_H_
#define BERNSTEIN_DATASET_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bernstein {

enum class LabelKind {
  kNone,
  kReal,
  // Stored as +1 / -1.
  kBinary,
};

std::string LabelKindName(LabelKind kind);
// Throws ConfigError on an unknown name.
LabelKind ParseLabelKind(const std::string& name);

// n records of ell features in [0,1] and an optional label each. Features are
// stored row-major.
class Dataset {
 public:
  Dataset(int ell, LabelKind label_kind);

  void Add(std::span<const double> features, std::optional<double> label = {});

  int ell() const { return ell_; }
  LabelKind label_kind() const { return label_kind_; }
  std::size_t size() const { return count_; }
  bool empty() const { return size() == 0; }

  std::span<const double> point(std::size_t i) const {
    return {features_.data() + i * static_cast<std::size_t>(ell_),
            static_cast<std::size_t>(ell_)};
  }
  double label(std::size_t i) const { return labels_.at(i); }
  std::span<const double> labels() const { return labels_; }

  // A copy with record i replaced: a neighbouring dataset.
  Dataset WithRecord(std::size_t i, std::span<const double> features,
                     std::optional<double> label = {}) const;

  // n >= 1, features inside the unit cube, binary labels in {-1, +1}.
  // Throws PreconditionError naming the first offending record.
  void Validate() const;

  // Throws PreconditionError if some record has Euclidean norm above 1.
  void ValidateUnitBall() const;

 private:
  int ell_;
  LabelKind label_kind_;
  std::size_t count_ = 0;
  std::vector<double> features_;
  std::vector<double> labels_;
};

}  // namespace bernstein

#endif  // BERNSTEIN_DATASET_H_
