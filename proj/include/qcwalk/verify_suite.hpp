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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcwalk/distance.hpp"
#include "qcwalk/graph.hpp"

namespace qcwalk {

/// Largest graph the verification suite accepts; full Uhlmann fidelities
/// are cubic per sample.
inline constexpr std::size_t kMaxVerifyNodes = 10;

struct InvariantCheck {
  std::string name;
  double error;
  double tolerance;
  bool passed() const { return error <= tolerance; }
};

/// Laplacian, eigendecomposition and propagator identities for one graph:
/// row sums, symmetry, trace, reconstruction, orthogonality, stochasticity,
/// unitarity, and the semigroup/group laws at the given times.
std::vector<InvariantCheck> check_invariants(const Graph& g, const std::vector<double>& times);

struct VerifyOptions {
  std::size_t n_max = 8;
  /// Total Dirichlet samples, spread over the generated graphs.
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::vector<double> times{0.1, 0.5, 1.0, 3.0};
  /// Test hook: replaces the Uhlmann routine.
  FidelityFn fidelity = uhlmann_fidelity;
};

struct VerifyResult {
  bool passed = true;
  double worst_margin = 0.0;
  double localized_mismatch = 0.0;
  std::size_t graphs = 0;
  std::size_t evaluations = 0;
  std::vector<std::string> failures;
};

/// Graphs used by the suite: for every n in [3, n_max] a seeded
/// random_connected graph with random node-1 degree, plus path, star and
/// (n >= 4) wheel.
std::vector<Graph> verification_graphs(std::size_t n_max, std::uint64_t seed);

/// Runs the optimality check and the invariant checks over
/// verification_graphs(), writing a readable summary to `log`.
/// Throws std::invalid_argument if n_max is outside [3, kMaxVerifyNodes].
VerifyResult run_verify_suite(const VerifyOptions& options, std::ostream& log);

}  // namespace qcwalk
