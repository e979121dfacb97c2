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

// Delimiter-separated dataset files:
//
//   bernstein-dataset ell=2 label=binary
//   # comment
//   0.31, 0.52, +1
//   0.64  0.37  -
//
// One record per line: ell features, then a label unless label=none. Fields
// are separated by commas, tabs or spaces. Binary labels may be written as
// +, -, +1, -1 or 1.

#ifndef BERNSTEIN_DATASET_IO_H_
#define BERNSTEIN_DATASET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bernstein/dataset.h"

namespace bernstein {

// Throws ParseError carrying the 1-based line number.
Dataset ParseDataset(std::string_view text);
Dataset ReadDatasetFile(const std::filesystem::path& path);

std::string SerializeDataset(const Dataset& dataset);
void WriteDatasetFile(const std::filesystem::path& path, const Dataset& dataset);

// Query files: one point per line, same delimiters, '#' comments; every line
// must have the same number of coordinates. Returns the points row-major and
// sets *ell (0 for an empty file).
std::vector<double> ParsePoints(std::string_view text, int* ell);
std::vector<double> ReadPointsFile(const std::filesystem::path& path, int* ell);

// Splits on commas, tabs and spaces, dropping empty fields.
std::vector<std::string> SplitFields(std::string_view line);

// Reads a whole file; throws ConfigError if it cannot be opened.
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace bernstein

#endif  // BERNSTEIN_DATASET_IO_H_
