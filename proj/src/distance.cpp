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

#include "qcwalk/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcwalk/errors.hpp"
#include "qcwalk/parallel.hpp"
#include "qcwalk/random.hpp"
#include "qcwalk/walks.hpp"

namespace qcwalk {

namespace {

constexpr double kRatioFloor = 1e-12;

void require_connected(const SpectralDecomposition& spec) {
  if (!spec.connected()) throw DisconnectedGraphError();
}

double distance_from(const WalkerPair& w) { return 1.0 - localized_fidelity(w); }

// Per-node evaluation at one time, shared by the pointwise and batched
// entry points so both produce identical bits.
void conditional_column(const SpectralDecomposition& spec, double t, double* out) {
  for (Node j = 0; j < spec.size(); ++j) out[j] = distance_from(evolve_localized(spec, j, t));
}

QcValue reduce_max(const double* values, std::size_t n) {
  QcValue best{values[0], 0};
  for (Node j = 1; j < n; ++j) {
    if (values[j] > best.value) best = {values[j], j};
  }
  return best;
}

double reduce_mean(const double* values, std::size_t n) {
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += values[j];
  return sum / static_cast<double>(n);
}


}  // namespace

double conditional_distance(const SpectralDecomposition& spec, Node j, double t) {
  require_connected(spec);
  return distance_from(evolve_localized(spec, j, t));
}

QcValue qc_distance(const SpectralDecomposition& spec, double t) {
  require_connected(spec);
  std::vector<double> column(spec.size());
  conditional_column(spec, t, column.data());
  return reduce_max(column.data(), column.size());
}

double average_distance(const SpectralDecomposition& spec, double t) {
  require_connected(spec);
  std::vector<double> column(spec.size());
  conditional_column(spec, t, column.data());
  return reduce_mean(column.data(), column.size());
}

DistanceCurve distance_curve(const SpectralDecomposition& spec, std::span<const double> grid,
                             unsigned workers) {
  require_connected(spec);
  if (grid.empty()) throw std::invalid_argument("time grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0)) throw std::invalid_argument("time grid has a negative entry");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("time grid is not strictly increasing");
    }
  }
  const std::size_t n = spec.size();
  const std::size_t steps = grid.size();
  DistanceCurve curve;
  curve.times.assign(grid.begin(), grid.end());
  curve.qc.resize(steps);
  curve.argmax_node.resize(steps);
  curve.average.resize(steps);
  // Column-major n x T: column i is contiguous.
  curve.conditional.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(steps));

  parallel_for(steps, workers, [&](std::size_t i) {
    double* column = curve.conditional.col(static_cast<Eigen::Index>(i)).data();
    conditional_column(spec, grid[i], column);
    const auto best = reduce_max(column, n);
    curve.qc[i] = best.value;
    curve.argmax_node[i] = best.argmax;
    curve.average[i] = reduce_mean(column, n);
  });
  return curve;
}

double short_asymptote(const SpectralDecomposition& spec, Node j, double t) {
  require_connected(spec);
  return 0.5 * coherence(quantum_amplitudes(spec, j, t));
}

double long_asymptote(const SpectralDecomposition& spec, Node j, double t) {
  require_connected(spec);
  const auto w = evolve_localized(spec, j, t);
  const double g = classical_fidelity(w);
  return 1.0 - g * g + coherence(w.quantum) / static_cast<double>(spec.size());
}

std::vector<NodeDiagnostics> node_diagnostics(const SpectralDecomposition& spec, double t) {
  require_connected(spec);
  const std::size_t n = spec.size();
  std::vector<NodeDiagnostics> out;
  out.reserve(n);
  for (Node j = 0; j < n; ++j) {
    const auto w = evolve_localized(spec, j, t);
    const double c = coherence(w.quantum);
    const double g = classical_fidelity(w);
    const double nn = static_cast<double>(n);
    out.push_back({distance_from(w), c, g, 0.5 * c, 1.0 - g * g + c / nn, g * g - c / nn});
  }
  return out;
}

GraphDiagnostics reduce_diagnostics(std::span<const NodeDiagnostics> nodes) {
  if (nodes.empty()) throw std::invalid_argument("no node diagnostics to reduce");
  std::vector<double> conditional(nodes.size());
  double short_max = -std::numeric_limits<double>::infinity();
  double long_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    conditional[j] = nodes[j].conditional;
    short_max = std::max(short_max, nodes[j].short_value);
    long_max = std::max(long_max, nodes[j].long_value);
  }
  GraphDiagnostics out{reduce_max(conditional.data(), conditional.size()),
                       reduce_mean(conditional.data(), conditional.size()), std::nullopt,
                       std::nullopt};
  if (std::abs(short_max) > kRatioFloor) out.gamma_s = out.qc.value / short_max;
  if (std::abs(long_max) > kRatioFloor) out.gamma_l = out.qc.value / long_max;
  return out;
}

std::optional<double> gamma_ratio(const SpectralDecomposition& spec, Regime which, double t) {
  const auto nodes = node_diagnostics(spec, t);
  const auto graph = reduce_diagnostics(nodes);
  return which == Regime::Short ? graph.gamma_s : graph.gamma_l;
}

double delta(const SpectralDecomposition& spec, Node j, double t) {
  require_connected(spec);
  const auto w = evolve_localized(spec, j, t);
  const double g = classical_fidelity(w);
  return g * g - coherence(w.quantum) / static_cast<double>(spec.size());
}

double delta_at_argmax(const SpectralDecomposition& spec, double t) {
  return delta(spec, qc_distance(spec, t).argmax, t);
}

AsymptoticsReport asymptotics(const SpectralDecomposition& spec, Node j, double t) {
  require_connected(spec);
  if (j >= spec.size()) throw std::invalid_argument("node " + std::to_string(j) + " out of range");
  const auto nodes = node_diagnostics(spec, t);
  const auto graph = reduce_diagnostics(nodes);
  const auto& node = nodes[j];
  return {node.short_value, node.long_value, graph.gamma_s, graph.gamma_l, node.delta};
}

DensityMatrix classical_channel(const SpectralDecomposition& spec, const Eigen::VectorXd& z,
                                double t) {
  return DensityMatrix::diagonal(heat_propagator(spec, t) * z);
}

DensityMatrix quantum_channel(const SpectralDecomposition& spec, const Eigen::VectorXd& z,
                              double t) {
  const Eigen::MatrixXcd u = unitary_propagator(spec, t);
  return DensityMatrix(u * z.cast<Complex>().asDiagonal() * u.adjoint());
}

OptimalityReport verify_localized_optimality(const SpectralDecomposition& spec,
                                             std::size_t n_samples,
                                             std::span<const double> t_values,
                                             std::uint64_t seed, const FidelityFn& fidelity) {
  require_connected(spec);
  if (n_samples == 0) throw std::invalid_argument("n_samples must be positive");
  for (const double t : t_values) {
    if (!(t >= 0.0)) throw std::invalid_argument("verification times must be nonnegative");
  }
  const std::size_t n = spec.size();
  const auto dim = static_cast<Eigen::Index>(n);

  OptimalityReport report{std::numeric_limits<double>::infinity(), 0.0, {}};
  std::vector<double> minima;
  minima.reserve(t_values.size());
  for (const double t : t_values) {
    double lowest = std::numeric_limits<double>::infinity();
    for (Node j = 0; j < n; ++j) {
      const double fj = localized_fidelity(spec, j, t);
      lowest = std::min(lowest, fj);
      const Eigen::VectorXd unit = Eigen::VectorXd::Unit(dim, static_cast<Eigen::Index>(j));
      const double oracle = fidelity(classical_channel(spec, unit, t), quantum_channel(spec, unit, t));
      report.localized_mismatch = std::max(report.localized_mismatch, std::abs(oracle - fj));
    }
    minima.push_back(lowest);
  }

  Rng rng(seed);
  report.margins.reserve(n_samples * t_values.size());
  for (std::size_t s = 0; s < n_samples; ++s) {
    Eigen::VectorXd z(dim);
    for (Eigen::Index k = 0; k < dim; ++k) z(k) = standard_exponential(rng);
    z /= z.sum();
    for (std::size_t i = 0; i < t_values.size(); ++i) {
      const double t = t_values[i];
      const double f = fidelity(classical_channel(spec, z, t), quantum_channel(spec, z, t));
      const double margin = f - minima[i];
      report.margins.push_back({s, t, f, minima[i], margin});
      report.worst_violation = std::min(report.worst_violation, margin);
    }
  }
  return report;
}

}  // namespace qcwalk
