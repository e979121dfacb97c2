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

// Seeded random streams. Every random quantity in the library is drawn from a
// std::mt19937_64 seeded explicitly by the caller so that runs are
// reproducible bit for bit.

#ifndef BERNSTEIN_RNG_H_
#define BERNSTEIN_RNG_H_

#include <cstdint>
#include <random>

namespace bernstein {

using Rng = std::mt19937_64;

// Mixes a master seed with stream coordinates (cell index, repeat, ...) into
// an independent-looking child seed (SplitMix64 finalizer chain).
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t a,
                         std::uint64_t b = 0);

// Uniform on the open interval (0, 1) using the top 53 bits of one draw.
double UniformOpen(Rng& rng);

// A seed from std::random_device, for callers that did not supply one.
std::uint64_t EntropySeed();

}  // namespace bernstein

#endif  // BERNSTEIN_RNG_H_
