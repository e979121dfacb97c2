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

// Name-based construction of learner targets from JSON parameter objects, as
// used by the CLI, the experiment runner and the Python bindings.
//
//   {"id": "kde", "bandwidth": 0.1}
//   {"id": "pc_regression", "bandwidth": 0.1, "label_bound": 1, "gap_constant": 1}
//   {"id": "naive_bayes", "bandwidth": 0.1, "likelihood": "kde"}
//   {"id": "erm", "C": 1, "loss": "hinge", "kernel": "rbf", "sigma": 1}
//   {"id": "logistic", "C": 1, "output": "margin"}

#ifndef BERNSTEIN_LEARNER_REGISTRY_H_
#define BERNSTEIN_LEARNER_REGISTRY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"
#include "json.hpp"

namespace bernstein {

std::vector<std::string> LearnerIds();

// Label type the learner trains on. Throws ConfigError for unknown ids.
LabelKind RequiredLabelKind(const nlohmann::json& learner);

// Throws ConfigError for unknown ids, unknown keys or ill-typed values.
TargetFunction MakeTarget(const nlohmann::json& learner, int ell, std::size_t n);

// Parses "key=value" into the object, guessing number / bool / string.
void SetParam(nlohmann::json& learner, const std::string& assignment);

}  // namespace bernstein

#endif  // BERNSTEIN_LEARNER_REGISTRY_H_
