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

#include <Eigen/Dense>

#include "qcwalk/graph.hpp"
#include "qcwalk/spectral.hpp"

namespace qcwalk {

/// Site distribution p_kj(t) of a classical walker started on node j.
struct ProbabilityVector {
  Eigen::VectorXd values;
};

/// Site amplitudes alpha_kj(t) of a quantum walker started on node j.
struct AmplitudeVector {
  Eigen::VectorXcd values;
};

/// Both walkers for one (j, t), evaluated from the shared spectrum in one
/// pass. Every walker-level quantity below is a function of this pair.
struct WalkerPair {
  ProbabilityVector classical;
  AmplitudeVector quantum;
};

WalkerPair evolve_localized(const SpectralDecomposition& spec, Node j, double t);

ProbabilityVector classical_distribution(const SpectralDecomposition& spec, Node j, double t);
AmplitudeVector quantum_amplitudes(const SpectralDecomposition& spec, Node j, double t);

/// F_j(t) = sum_k p_kj |alpha_kj|^2.
double localized_fidelity(const SpectralDecomposition& spec, Node j, double t);

/// l1 coherence of the evolved pure state, C_j(t) = (sum_k |alpha_kj|)^2 - 1.
/// Defined for any real t.
double coherence(const SpectralDecomposition& spec, Node j, double t);

/// Bhattacharyya coefficient G_j(t) = sum_k sqrt(p_kj |alpha_kj|^2).
double classical_fidelity(const SpectralDecomposition& spec, Node j, double t);

// The same three quantities from an already evolved pair.
double localized_fidelity(const WalkerPair& w);
double coherence(const AmplitudeVector& a);
double classical_fidelity(const WalkerPair& w);

}  // namespace qcwalk
