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

#include "qcwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qcwalk/errors.hpp"

namespace qcwalk {

namespace {

bool laplacian_connected(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Eigen::Index> stack{0};
  seen[0] = true;
  Eigen::Index reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (Eigen::Index v = 0; v < n; ++v) {
      if (v != u && m(u, v) != 0.0 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

// sqrt of a Hermitian PSD matrix. Eigenvalues below the roundoff floor
// n * eps * lambda_max are zeroed.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw ComputationError("Hermitian eigensolver failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  const double floor = static_cast<double>(m.rows()) * std::numeric_limits<double>::epsilon() *
                       std::max(w.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::VectorXd root(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) root(i) = w(i) > floor ? std::sqrt(w(i)) : 0.0;
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd eigenvalues,
                                             Eigen::MatrixXd eigenvectors, bool connected)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      connected_(connected) {
  if (eigenvectors_.rows() != eigenvalues_.size() || eigenvectors_.cols() != eigenvalues_.size()) {
    throw std::invalid_argument("eigenvector matrix does not match eigenvalue count");
  }
}

double SpectralDecomposition::fiedler() const {
  if (!connected_ || size() < 2) return 0.0;
  return std::abs(eigenvalues_(1));
}

SpectralDecomposition eigendecompose(const Laplacian& lap) {
  const Eigen::MatrixXd& m = lap.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) {
    throw ComputationError("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& raw = es.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(raw.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(raw(a)) < std::abs(raw(b));
  });
  Eigen::VectorXd values(raw.size());
  Eigen::MatrixXd vectors(m.rows(), m.cols());
  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto dst = static_cast<Eigen::Index>(s);
    values(dst) = raw(order[s]);
    vectors.col(dst) = es.eigenvectors().col(order[s]);
  }
  return SpectralDecomposition(std::move(values), std::move(vectors), laplacian_connected(m));
}

Eigen::MatrixXd heat_propagator(const SpectralDecomposition& spec, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("heat propagator requires t >= 0");
  const Eigen::VectorXd decay = (spec.eigenvalues() * t).array().exp();
  return spec.eigenvectors() * decay.asDiagonal() * spec.eigenvectors().transpose();
}

Eigen::MatrixXcd unitary_propagator(const SpectralDecomposition& spec, double t) {
  const Eigen::VectorXd& lambda = spec.eigenvalues();
  Eigen::VectorXcd phase(lambda.size());
  for (Eigen::Index s = 0; s < lambda.size(); ++s) phase(s) = std::polar(1.0, lambda(s) * t);
  const Eigen::MatrixXcd q = spec.eigenvectors().cast<Complex>();
  return q * phase.asDiagonal() * q.transpose();
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ComputationError("Hermitian eigensolver failed");
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const Eigen::VectorXd& weights) {
  return DensityMatrix(weights.cast<Complex>().asDiagonal().toDenseMatrix());
}

double uhlmann_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.size() != rho2.size()) {
    throw std::invalid_argument("density matrices have different dimensions");
  }
  const Eigen::MatrixXcd root1 = psd_sqrt(rho1.matrix());
  Eigen::MatrixXcd inner = root1 * rho2.matrix() * root1;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ComputationError("Hermitian eigensolver failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  const double floor = static_cast<double>(w.size()) * std::numeric_limits<double>::epsilon() *
                       std::max(w.cwiseAbs().maxCoeff(), 1e-300);
  double trace_root = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > floor) trace_root += std::sqrt(w(i));
  }
  return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

}  // namespace qcwalk
