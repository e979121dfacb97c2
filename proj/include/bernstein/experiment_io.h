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

// Experiment specs are JSON objects with the ExperimentSpec field names:
//
//   {"learner": {"id": "kde", "bandwidth": 0.1},
//    "data": {"generator": "mixture", "seed": 7,
//             "params": {"n": 5000, "components": [...]}},
//    "epsilon_grid": [0.5, 1, 2], "h_grid": [1, 2, 3], "k": 20 | "auto",
//    "repeats": 200, "beta": 0.05, "delta": 0, "grid_resolution": 201,
//    "seed": 1, "sensitivity_override": 0}
//
// Reports are CSV with one row per (method, cell, repeat) and one aggregate
// row per (method, cell):
//
//   row_type,method,epsilon,h,k,repeat,lambda,sup_error,mean,quantile,status

#ifndef BERNSTEIN_EXPERIMENT_IO_H_
#define BERNSTEIN_EXPERIMENT_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "bernstein/experiments.h"

namespace bernstein {

// Throws ConfigError (with the offending field) on a malformed spec;
// relative "file" data paths resolve against `base_dir`.
ExperimentSpec ParseExperimentSpec(std::string_view text,
                                   const std::filesystem::path& base_dir = {});
ExperimentSpec ReadExperimentSpecFile(const std::filesystem::path& path);

std::string ReportToCsv(const ExperimentReport& report);
void WriteReportFile(const std::filesystem::path& path,
                     const ExperimentReport& report);

}  // namespace bernstein

#endif  // BERNSTEIN_EXPERIMENT_IO_H_
