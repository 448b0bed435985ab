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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qcwalk/graph.hpp"

namespace qcwalk {

using Complex = std::complex<double>;

/// Eigendecomposition L = Q diag(lambda) Q^T of a graph Laplacian.
///
/// Eigenvalues are ordered by ascending modulus, so index 0 is the zero mode
/// and index 1 carries the Fiedler value for connected graphs. Equal-modulus
/// eigenvalues keep the solver's order. The decomposition also records
/// whether the underlying graph is connected (read off the sparsity pattern
/// of the Laplacian, not from the spectrum).
class SpectralDecomposition {
 public:
  SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors,
                        bool connected);

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Column s is the eigenvector for eigenvalues()[s].
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  bool connected() const { return connected_; }
  /// |lambda_1|, or 0 when disconnected or n == 1.
  double fiedler() const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  bool connected_;
};

/// Throws ComputationError if the symmetric eigensolver does not converge.
SpectralDecomposition eigendecompose(const Laplacian& lap);

/// e^{L t} for t >= 0 (std::invalid_argument otherwise). Doubly stochastic.
Eigen::MatrixXd heat_propagator(const SpectralDecomposition& spec, double t);

/// e^{i L t}, any real t.
Eigen::MatrixXcd unitary_propagator(const SpectralDecomposition& spec, double t);

/// Hermitian, positive semidefinite, unit-trace matrix.
///
/// Construction validates trace (1e-10), Hermiticity (1e-12) and the
/// smallest eigenvalue (>= -1e-10), then stores the exactly Hermitian part.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Eigen::MatrixXcd& matrix);

  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix diagonal(const Eigen::VectorXd& weights);

  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
};

/// Uhlmann fidelity [Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2, clamped to [0, 1].
///
/// Both square roots go through a Hermitian eigendecomposition. Eigenvalues
/// below n * eps * lambda_max (including the small negatives left by
/// roundoff) are treated as exact zeros; otherwise a rank-deficient argument
/// would contribute O(sqrt(eps)) spurious weight.
double uhlmann_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace qcwalk
