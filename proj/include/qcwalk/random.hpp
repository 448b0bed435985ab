// Copyright 2026 The qcwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qcwalk {

// std::mt19937_64 is fully specified by the standard, but the std::
// distributions are not. The helpers below draw from the raw 64-bit stream
// so that edge sets and samples are reproducible across toolchains and
// across ports of this library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on the raw stream.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard exponential variate; sums of these normalise to a flat
/// Dirichlet sample.
inline double standard_exponential(Rng& rng) {
  return -std::log1p(-uniform_unit(rng));
}

}  // namespace qcwalk
