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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcwalk/graph.hpp"
#include "qcwalk/spectral.hpp"

// Every routine in this header throws DisconnectedGraphError when handed the
// spectrum of a disconnected graph, and std::invalid_argument for negative
// times or out-of-range nodes.

namespace qcwalk {

/// D_QC(t|j) = 1 - F_j(t).
double conditional_distance(const SpectralDecomposition& spec, Node j, double t);

struct QcValue {
  double value;
  Node argmax;
};

/// max_j D_QC(t|j); ties resolve to the smallest node index.
QcValue qc_distance(const SpectralDecomposition& spec, double t);

/// Mean of D_QC(t|j) over all starting nodes.
double average_distance(const SpectralDecomposition& spec, double t);

struct DistanceCurve {
  std::vector<double> times;
  /// n x T, row j holds D_QC(t|j).
  Eigen::MatrixXd conditional;
  std::vector<double> qc;
  std::vector<Node> argmax_node;
  std::vector<double> average;
};

/// Batched evaluation over a nonempty, strictly increasing, nonnegative
/// grid. Work is split over `workers` threads by time index; every cell is
/// computed by the same scalar path as conditional_distance, so the result is
/// bitwise identical for any worker count.
DistanceCurve distance_curve(const SpectralDecomposition& spec, std::span<const double> grid,
                             unsigned workers = 1);

/// D^S(t|j) = C_j(t) / 2.
double short_asymptote(const SpectralDecomposition& spec, Node j, double t);
/// D^L(t|j) = 1 - G_j(t)^2 + C_j(t) / n.
double long_asymptote(const SpectralDecomposition& spec, Node j, double t);

enum class Regime { Short, Long };

/// gamma_K(t) = D_QC(t) / max_j D^K(t|j). Empty when the denominator is
/// at most 1e-12 (always the case at t = 0).
std::optional<double> gamma_ratio(const SpectralDecomposition& spec, Regime which, double t);

/// delta_j(t) = G_j(t)^2 - C_j(t) / n.
double delta(const SpectralDecomposition& spec, Node j, double t);
/// delta evaluated at the argmax node of D_QC(t).
double delta_at_argmax(const SpectralDecomposition& spec, double t);

/// Every node-level quantity at one time, from a single evolution per node.
struct NodeDiagnostics {
  double conditional;  // D_QC(t|j)
  double coherence;    // C_j(t)
  double gfid;         // G_j(t)
  double short_value;  // D^S(t|j)
  double long_value;   // D^L(t|j)
  double delta;        // G_j^2 - C_j / n
};

std::vector<NodeDiagnostics> node_diagnostics(const SpectralDecomposition& spec, double t);

struct GraphDiagnostics {
  QcValue qc;
  double average;
  std::optional<double> gamma_s;
  std::optional<double> gamma_l;
};

/// Graph-level reductions of a node_diagnostics() slice.
GraphDiagnostics reduce_diagnostics(std::span<const NodeDiagnostics> nodes);

struct AsymptoticsReport {
  double short_value;
  double long_value;
  std::optional<double> gamma_s;
  std::optional<double> gamma_l;
  double delta;
};

/// Node-level asymptotes and delta for node j; the gamma ratios are graph
/// level (maximised over nodes) and do not depend on j.
AsymptoticsReport asymptotics(const SpectralDecomposition& spec, Node j, double t);

// Brute-force check that localized preparations minimise the fidelity
// between the classically and quantum evolved states over all diagonal
// initial states.

using FidelityFn = std::function<double(const DensityMatrix&, const DensityMatrix&)>;

struct OptimalitySample {
  std::size_t sample;
  double t;
  /// Fidelity for the sampled mixed initial state.
  double fidelity;
  /// min_j F_j(t).
  double localized_minimum;
  /// fidelity - localized_minimum; negative values contradict optimality.
  double margin;
};

struct OptimalityReport {
  /// Smallest margin seen; +inf when no times were given.
  double worst_violation;
  /// max |F(E_C(rho_j), E_Q(rho_j)) - F_j(t)| over all nodes and times.
  double localized_mismatch;
  std::vector<OptimalitySample> margins;
};

/// Draws `n_samples` flat-Dirichlet weight vectors z (seeded, see random.hpp)
/// and, for each listed time, compares the Uhlmann fidelity of
/// diag(e^{Lt} z) and U diag(z) U^dagger against min_j F_j(t). `fidelity`
/// replaces the Uhlmann routine, which lets tests inject a faulty one.
OptimalityReport verify_localized_optimality(const SpectralDecomposition& spec,
                                             std::size_t n_samples,
                                             std::span<const double> t_values,
                                             std::uint64_t seed,
                                             const FidelityFn& fidelity = uhlmann_fidelity);

/// E_C applied to a diagonal initial state with weights z.
DensityMatrix classical_channel(const SpectralDecomposition& spec, const Eigen::VectorXd& z,
                                double t);
/// E_Q applied to a diagonal initial state with weights z.
DensityMatrix quantum_channel(const SpectralDecomposition& spec, const Eigen::VectorXd& z,
                              double t);

}  // namespace qcwalk
