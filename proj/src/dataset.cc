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

#include "bernstein/dataset.h"

#include <cmath>
#include <sstream>

#include "bernstein/errors.h"

namespace bernstein {

std::string LabelKindName(LabelKind kind) {
  switch (kind) {
    case LabelKind::kNone:
      return "none";
    case LabelKind::kReal:
      return "real";
    case LabelKind::kBinary:
      return "binary";
  }
  return "none";
}

LabelKind ParseLabelKind(const std::string& name) {
  if (name == "none") return LabelKind::kNone;
  if (name == "real") return LabelKind::kReal;
  if (name == "binary") return LabelKind::kBinary;
  throw ConfigError("unknown label kind '" + name + "'");
}

Dataset::Dataset(int ell, LabelKind label_kind)
    : ell_(ell), label_kind_(label_kind) {
  if (ell < 1) throw ConfigError("dataset dimension must be >= 1");
}

void Dataset::Add(std::span<const double> features,
                  std::optional<double> label) {
  if (static_cast<int>(features.size()) != ell_) {
    throw ShapeError("record has " + std::to_string(features.size()) +
                     " features, dataset expects " + std::to_string(ell_));
  }
  if ((label_kind_ == LabelKind::kNone) != !label.has_value()) {
    throw ShapeError(label_kind_ == LabelKind::kNone
                         ? "unlabelled dataset given a label"
                         : "labelled dataset given a record without label");
  }
  features_.insert(features_.end(), features.begin(), features.end());
  if (label) labels_.push_back(*label);
  ++count_;
}

Dataset Dataset::WithRecord(std::size_t i, std::span<const double> features,
                            std::optional<double> label) const {
  if (i >= count_) throw DomainError("record index out of range");
  if (static_cast<int>(features.size()) != ell_) {
    throw ShapeError("replacement record has the wrong dimension");
  }
  Dataset out = *this;
  std::copy(features.begin(), features.end(),
            out.features_.begin() + static_cast<std::ptrdiff_t>(i * ell_));
  if (label_kind_ != LabelKind::kNone) {
    if (!label) throw ShapeError("replacement record needs a label");
    out.labels_[i] = *label;
  }
  return out;
}

void Dataset::Validate() const {
  if (count_ == 0) throw PreconditionError("dataset is empty");
  for (std::size_t i = 0; i < count_; ++i) {
    for (double x : point(i)) {
      if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "record " << i << " has feature " << x << " outside [0,1]";
        throw PreconditionError(msg.str(), i);
      }
    }
    if (label_kind_ == LabelKind::kBinary && labels_[i] != 1.0 &&
        labels_[i] != -1.0) {
      throw PreconditionError(
          "record " + std::to_string(i) + " has a binary label other than +1/-1",
          i);
    }
    if (label_kind_ == LabelKind::kReal && !std::isfinite(labels_[i])) {
      throw PreconditionError(
          "record " + std::to_string(i) + " has a non-finite label", i);
    }
  }
}

void Dataset::ValidateUnitBall() const {
  for (std::size_t i = 0; i < count_; ++i) {
    double sq = 0.0;
    for (double x : point(i)) sq += x * x;
    if (sq > 1.0 + 1e-12) {
      std::ostringstream msg;
      msg << "record " << i << " has Euclidean norm " << std::sqrt(sq)
          << " > 1";
      throw PreconditionError(msg.str(), i);
    }
  }
}

}  // namespace bernstein
