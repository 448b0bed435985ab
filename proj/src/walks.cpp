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

#include "qcwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcwalk/errors.hpp"

namespace qcwalk {

namespace {

void check_node(const SpectralDecomposition& spec, Node j) {
  if (j >= spec.size()) {
    throw std::invalid_argument("node " + std::to_string(j) + " out of range for graph of size " +
                                std::to_string(spec.size()));
  }
}

void check_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
}

Eigen::VectorXcd amplitudes_column(const SpectralDecomposition& spec, Node j, double t) {
  const auto n = static_cast<Eigen::Index>(spec.size());
  if (t == 0.0) {
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(n);
    unit(static_cast<Eigen::Index>(j)) = 1.0;
    return unit;
  }
  const Eigen::MatrixXd& q = spec.eigenvectors();
  const Eigen::VectorXd& lambda = spec.eigenvalues();
  Eigen::VectorXcd weights(n);
  for (Eigen::Index s = 0; s < n; ++s) {
    weights(s) = q(static_cast<Eigen::Index>(j), s) * std::polar(1.0, lambda(s) * t);
  }
  return q.cast<Complex>() * weights;
}

Eigen::VectorXd probability_column(const SpectralDecomposition& spec, Node j, double t) {
  const auto n = static_cast<Eigen::Index>(spec.size());
  if (t == 0.0) {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(n);
    unit(static_cast<Eigen::Index>(j)) = 1.0;
    return unit;
  }
  const Eigen::MatrixXd& q = spec.eigenvectors();
  const Eigen::VectorXd weights =
      q.row(static_cast<Eigen::Index>(j)).transpose().cwiseProduct(
          (spec.eigenvalues() * t).array().exp().matrix());
  return q * weights;
}

}  // namespace

WalkerPair evolve_localized(const SpectralDecomposition& spec, Node j, double t) {
  check_node(spec, j);
  check_time(t);
  return {ProbabilityVector{probability_column(spec, j, t)},
          AmplitudeVector{amplitudes_column(spec, j, t)}};
}

ProbabilityVector classical_distribution(const SpectralDecomposition& spec, Node j, double t) {
  check_node(spec, j);
  check_time(t);
  return {probability_column(spec, j, t)};
}

AmplitudeVector quantum_amplitudes(const SpectralDecomposition& spec, Node j, double t) {
  check_node(spec, j);
  return {amplitudes_column(spec, j, t)};
}

double localized_fidelity(const WalkerPair& w) {
  const double f = w.classical.values.dot(w.quantum.values.cwiseAbs2());
  return std::clamp(f, 0.0, 1.0);
}

double coherence(const AmplitudeVector& a) {
  const double l1 = a.values.cwiseAbs().sum();
  return std::max(l1 * l1 - 1.0, 0.0);
}

double classical_fidelity(const WalkerPair& w) {
  const Eigen::VectorXd& p = w.classical.values;
  double g = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    double pk = p(k);
    if (pk < 0.0) {
      if (pk < -1e-10) {
        throw ComputationError("transition probability " + std::to_string(pk) +
                               " is negative beyond roundoff");
      }
      pk = 0.0;
    }
    g += std::sqrt(pk) * std::abs(w.quantum.values(k));
  }
  return std::clamp(g, 0.0, 1.0);
}

double localized_fidelity(const SpectralDecomposition& spec, Node j, double t) {
  return localized_fidelity(evolve_localized(spec, j, t));
}

double coherence(const SpectralDecomposition& spec, Node j, double t) {
  return coherence(quantum_amplitudes(spec, j, t));
}

double classical_fidelity(const SpectralDecomposition& spec, Node j, double t) {
  return classical_fidelity(evolve_localized(spec, j, t));
}

}  // namespace qcwalk
