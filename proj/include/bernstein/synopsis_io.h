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

// Text persistence of a Synopsis. The format is a JSON object
//
//   {"format": "bernstein-synopsis", "version": 1, "ell": .., "k": ..,
//    "h": .., "epsilon": .., "delta": .., "sensitivity": .., "lambda": ..,
//    "seed": .., "values": [..]}
//
// with every floating-point number written with 17 significant digits so a
// write/read cycle reproduces the doubles exactly. `values` is in canonical
// lattice order (row-major, last axis fastest).

#ifndef BERNSTEIN_SYNOPSIS_IO_H_
#define BERNSTEIN_SYNOPSIS_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "bernstein/dp_mechanism.h"

namespace bernstein {

inline constexpr int kSynopsisFormatVersion = 1;

std::string SerializeSynopsis(const Synopsis& synopsis);

// Throws ParseError on malformed text, unknown versions, a value count that
// disagrees with (k, ell), or a lambda inconsistent with the recorded budget.
Synopsis ParseSynopsis(std::string_view text);

void WriteSynopsisFile(const std::filesystem::path& path,
                       const Synopsis& synopsis);
Synopsis ReadSynopsisFile(const std::filesystem::path& path);

// "%.17g".
std::string FormatDouble(double v);

}  // namespace bernstein

#endif  // BERNSTEIN_SYNOPSIS_IO_H_
