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

#include "qcwalk/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcwalk/random.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/walks.hpp"

namespace qcwalk {

namespace {

constexpr double kMarginTolerance = 1e-8;
constexpr double kLocalizedTolerance = 1e-9;

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " edges={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    os << (i ? " " : "") << g.edges()[i].first << '-' << g.edges()[i].second;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::vector<InvariantCheck> check_invariants(const Graph& g, const std::vector<double>& times) {
  std::vector<InvariantCheck> out;
  const Laplacian lap = laplacian(g);
  const Eigen::MatrixXd& l = lap.matrix();
  const auto n = l.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

  out.push_back({"laplacian row sums", l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12});
  out.push_back({"laplacian symmetry", (l - l.transpose()).cwiseAbs().maxCoeff(), 0.0});
  out.push_back({"laplacian trace", std::abs(l.trace() + 2.0 * static_cast<double>(g.edge_count())),
                 0.0});

  const auto spec = eigendecompose(lap);
  const Eigen::MatrixXd& q = spec.eigenvectors();
  const Eigen::VectorXd& lambda = spec.eigenvalues();
  out.push_back({"spectral reconstruction",
                 (q * lambda.asDiagonal() * q.transpose() - l).cwiseAbs().maxCoeff(), 1e-9});
  out.push_back({"eigenvector orthogonality", (q.transpose() * q - eye).cwiseAbs().maxCoeff(), 1e-9});
  out.push_back({"zero mode first", std::abs(lambda(0)), 1e-9});
  out.push_back({"eigenvalues nonpositive", std::max(lambda.maxCoeff(), 0.0), 1e-9});

  double stochastic = 0.0;
  double range = 0.0;
  double unitary = 0.0;
  double group = 0.0;
  double semigroup = 0.0;
  for (const double t : times) {
    const Eigen::MatrixXd heat = heat_propagator(spec, t);
    stochastic = std::max({stochastic, (heat.rowwise().sum().array() - 1.0).abs().maxCoeff(),
                           (heat.colwise().sum().array() - 1.0).abs().maxCoeff()});
    range = std::max({range, -heat.minCoeff(), heat.maxCoeff() - 1.0});
    const Eigen::MatrixXcd u = unitary_propagator(spec, t);
    const Eigen::MatrixXcd ceye = Eigen::MatrixXcd::Identity(n, n);
    unitary = std::max(unitary, (u * u.adjoint() - ceye).cwiseAbs().maxCoeff());
    group = std::max(group, (u * unitary_propagator(spec, -t) - ceye).cwiseAbs().maxCoeff());
    for (const double s : times) {
      semigroup = std::max(semigroup, (heat * heat_propagator(spec, s) - heat_propagator(spec, t + s))
                                          .cwiseAbs()
                                          .maxCoeff());
    }
  }
  out.push_back({"heat kernel doubly stochastic", stochastic, 1e-10});
  out.push_back({"heat kernel entries in [0,1]", std::max(range, 0.0), 1e-10});
  out.push_back({"unitary propagator", unitary, 1e-10});
  out.push_back({"unitary group law", group, 1e-8});
  out.push_back({"heat semigroup law", semigroup, 1e-8});
  return out;
}

std::vector<Graph> verification_graphs(std::size_t n_max, std::uint64_t seed) {
  std::vector<Graph> graphs;
  Rng rng(seed);
  for (std::size_t n = 3; n <= n_max; ++n) {
    const std::size_t d = 2 + static_cast<std::size_t>(uniform_below(rng, n - 2));
    graphs.push_back(generate(GraphKind::RandomConnected, n, d, rng()));
    graphs.push_back(generate(GraphKind::Path, n));
    graphs.push_back(generate(GraphKind::Star, n));
    if (n >= 4) graphs.push_back(generate(GraphKind::Wheel, n));
  }
  return graphs;
}

VerifyResult run_verify_suite(const VerifyOptions& options, std::ostream& log) {
  if (options.n_max < 3 || options.n_max > kMaxVerifyNodes) {
    throw std::invalid_argument("n_max must lie in [3, " + std::to_string(kMaxVerifyNodes) + "]");
  }
  if (options.samples == 0) throw std::invalid_argument("samples must be positive");

  VerifyResult result;
  result.worst_margin = std::numeric_limits<double>::infinity();
  const auto graphs = verification_graphs(options.n_max, options.seed);
  result.graphs = graphs.size();
  const std::size_t per_graph = (options.samples + graphs.size() - 1) / graphs.size();

  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    for (const auto& check : check_invariants(g, options.times)) {
      if (!check.passed()) {
        result.failures.push_back(check.name + " error " + std::to_string(check.error) +
                                  " > " + std::to_string(check.tolerance) + " on " + describe(g));
      }
    }

    const auto spec = eigendecompose(laplacian(g));
    const auto report = verify_localized_optimality(spec, per_graph, options.times,
                                                    options.seed + gi, options.fidelity);
    result.evaluations += report.margins.size();
    result.worst_margin = std::min(result.worst_margin, report.worst_violation);
    result.localized_mismatch = std::max(result.localized_mismatch, report.localized_mismatch);
    for (const auto& m : report.margins) {
      if (m.margin < -kMarginTolerance) {
        std::ostringstream os;
        os << "optimality violated on " << describe(g) << " sample " << m.sample << " t=" << m.t
           << ": fidelity " << m.fidelity << " < min_j F_j " << m.localized_minimum;
        result.failures.push_back(os.str());
      }
    }
    if (report.localized_mismatch > kLocalizedTolerance) {
      std::ostringstream os;
      os << "localized fidelity disagrees with the Uhlmann fidelity by "
         << report.localized_mismatch << " on " << describe(g);
      result.failures.push_back(os.str());
    }
  }

  result.passed = result.failures.empty();
  log << "graphs checked:        " << result.graphs << '\n'
      << "fidelity evaluations:  " << result.evaluations << '\n'
      << "worst margin:          " << result.worst_margin << " (tolerance " << -kMarginTolerance
      << ")\n"
      << "localized mismatch:    " << result.localized_mismatch << " (tolerance "
      << kLocalizedTolerance << ")\n";
  for (const auto& f : result.failures) log << "FAIL " << f << '\n';
  log << (result.passed ? "verification passed" : "verification FAILED") << '\n';
  return result;
}

}  // namespace qcwalk
