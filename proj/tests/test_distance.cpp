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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcwalk/distance.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/time_grid.hpp"
#include "qcwalk/walks.hpp"
#include "test_support.hpp"

using namespace qcwalk;

namespace {

SpectralDecomposition spectrum(const Graph& g) { return eigendecompose(laplacian(g)); }

std::vector<Graph> law_graphs() {
  std::vector<Graph> out{generate(GraphKind::Complete, 5), generate(GraphKind::Star, 7),
                         generate(GraphKind::Wheel, 9), generate(GraphKind::Ring, 11),
                         generate(GraphKind::Path, 8)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    out.push_back(generate(GraphKind::RandomConnected, 11, 2 + 2 * seed % 9, seed));
    out.push_back(testing::random_graph(4 + 3 * seed, 0.25, seed));
  }
  return out;
}

// Number of length-2 walks from j to nodes that are not its neighbours.
double two_step_count(const Graph& g, Node j) {
  double count = 0.0;
  for (const Node k : g.neighbors(j)) {
    for (const Node m : g.neighbors(k)) {
      if (m != j && std::ranges::count(g.neighbors(j), m) == 0) count += 1.0;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("conditional distance") {
  const auto k2 = spectrum(generate(GraphKind::Complete, 2));
  CHECK(conditional_distance(k2, 0, 0.0) == 0.0);
  for (double t : {0.02, 0.5, 3.0}) {
    CHECK(std::abs(conditional_distance(k2, 0, t) -
                   0.5 * (1 - std::exp(-2 * t) * std::cos(2 * t))) <= 1e-14);
  }
  // Slope at the origin equals the degree (1), by central difference
  // around a small t of the closed form's derivative.
  const double h = 1e-6;
  const double slope = (conditional_distance(k2, 0, 2 * h) - conditional_distance(k2, 0, h)) / h;
  CHECK(std::abs(slope - 1.0) <= 1e-5);

  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    const double t = 50.0 / s.fiedler();
    for (Node j = 0; j < g.size(); ++j) {
      CHECK(std::abs(conditional_distance(s, j, t) - (1.0 - 1.0 / static_cast<double>(g.size()))) <=
            1e-10);
    }
  }
  CHECK_THROWS_AS(conditional_distance(k2, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(conditional_distance(k2, 0, -1.0), std::invalid_argument);
}

TEST_CASE("qc distance and average") {
  const auto star = spectrum(generate(GraphKind::Star, 5));
  const auto at0 = qc_distance(star, 0.0);
  CHECK(at0.value == 0.0);
  CHECK(at0.argmax == 0);
  const auto small = qc_distance(star, 1e-4);
  CHECK(small.argmax == 0);
  CHECK(std::abs(small.value / 4e-4 - 1.0) <= 1e-3);

  const auto ring = spectrum(generate(GraphKind::Ring, 11));
  for (double t : {0.01, 0.3, 1.0, 4.0, 30.0}) {
    CHECK(std::abs(average_distance(ring, t) - qc_distance(ring, t).value) <= 1e-12);
    CHECK(std::abs(qc_distance(ring, t).value - conditional_distance(ring, 3, t)) <= 1e-12);
  }

  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    const double t = 1e-4;
    CHECK(std::abs(average_distance(s, t) / (average_degree(g) * t) - 1.0) <= 1e-2);
    const double late = 50.0 / s.fiedler();
    CHECK(std::abs(average_distance(s, late) - (1.0 - 1.0 / static_cast<double>(g.size()))) <= 1e-10);
    // The short-time maximiser is a maximum-degree node.
    CHECK(degree(g, qc_distance(s, 1e-5).argmax) == max_degree(g).degree);
  }
}

TEST_CASE("distance bounds") {
  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    for (double t : {0.0, 1e-3, 0.2, 1.0, 5.0, 40.0}) {
      const auto qc = qc_distance(s, t);
      CHECK(qc.value >= 0.0);
      CHECK(qc.value <= 1.0);
      CHECK(average_distance(s, t) <= qc.value + 1e-14);
    }
  }
}

TEST_CASE("disconnected graphs are refused") {
  const auto s = spectrum(graph_from_edges(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(conditional_distance(s, 0, 1.0), DisconnectedGraphError);
  CHECK_THROWS_AS(qc_distance(s, 1.0), DisconnectedGraphError);
  CHECK_THROWS_AS(average_distance(s, 1.0), DisconnectedGraphError);
  const std::vector<double> grid{0.0, 1.0};
  CHECK_THROWS_AS(distance_curve(s, grid), DisconnectedGraphError);
  CHECK_THROWS_AS(gamma_ratio(s, Regime::Long, 1.0), DisconnectedGraphError);
  CHECK_THROWS_AS(verify_localized_optimality(s, 3, grid, 0), DisconnectedGraphError);
}

TEST_CASE("distance curve") {
  const auto k2 = spectrum(generate(GraphKind::Complete, 2));
  const std::vector<double> zero{0.0};
  const auto c0 = distance_curve(k2, zero);
  CHECK(c0.qc == std::vector<double>{0.0});
  CHECK(c0.average == std::vector<double>{0.0});
  CHECK(c0.conditional.cwiseAbs().maxCoeff() == 0.0);

  const auto k5 = spectrum(generate(GraphKind::Complete, 5));
  const auto grid = TimeGrid{1e-2, 10.0, 399, Spacing::Log}.points();
  const auto curve = distance_curve(k5, grid);
  CHECK(std::abs(curve.qc.back() - 0.8) <= 1e-3);

  const auto g = generate(GraphKind::RandomConnected, 11, 7, 3);
  const auto s = spectrum(g);
  const auto many = TimeGrid{0.0, 20.0, 150, Spacing::Linear}.points();
  const auto serial = distance_curve(s, many, 1);
  for (unsigned workers : {2u, 3u, 8u, 200u}) {
    const auto parallel = distance_curve(s, many, workers);
    CHECK(parallel.conditional == serial.conditional);
    CHECK(parallel.qc == serial.qc);
    CHECK(parallel.argmax_node == serial.argmax_node);
    CHECK(parallel.average == serial.average);
  }
  for (std::size_t i = 0; i < many.size(); i += 17) {
    const auto qc = qc_distance(s, many[i]);
    CHECK(serial.qc[i] == qc.value);
    CHECK(serial.argmax_node[i] == qc.argmax);
    CHECK(serial.average[i] == average_distance(s, many[i]));
    double best = -1.0;
    for (Node j = 0; j < g.size(); ++j) {
      const double dj = conditional_distance(s, j, many[i]);
      CHECK(serial.conditional(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) == dj);
      best = std::max(best, dj);
    }
    CHECK(serial.qc[i] == best);
  }

  const std::vector<double> empty;
  const std::vector<double> unsorted{0.0, 2.0, 1.0};
  const std::vector<double> repeated{0.0, 1.0, 1.0};
  const std::vector<double> negative{-1.0, 1.0};
  CHECK_THROWS_AS(distance_curve(s, empty), std::invalid_argument);
  CHECK_THROWS_AS(distance_curve(s, unsorted), std::invalid_argument);
  CHECK_THROWS_AS(distance_curve(s, repeated), std::invalid_argument);
  CHECK_THROWS_AS(distance_curve(s, negative), std::invalid_argument);
}

TEST_CASE("short-time degree law") {
  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    const double t = 1e-3;
    for (Node j = 0; j < g.size(); ++j) {
      const double d = static_cast<double>(degree(g, j));
      CHECK(std::abs(conditional_distance(s, j, t) / (d * t) - 1.0) <= 0.05);
    }
  }
}

TEST_CASE("short-time coherence law holds to second order") {
  // D and C/2 share the first-order term d t; their difference is
  // -(d^2 - d + c2 / 2) t^2 + O(t^3), with c2 the two-step count.
  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    for (double t : {1e-3, 1e-4}) {
      for (Node j = 0; j < g.size(); ++j) {
        const double d = static_cast<double>(degree(g, j));
        const double gap = conditional_distance(s, j, t) - short_asymptote(s, j, t);
        const double predicted = -(d * d - d + 0.5 * two_step_count(g, j)) * t * t;
        CHECK(std::abs(gap - predicted) <= 50.0 * d * d * d * t * t * t + 1e-12);
      }
    }
  }
}

TEST_CASE("asymptotes") {
  const auto k2 = spectrum(generate(GraphKind::Complete, 2));
  CHECK(short_asymptote(k2, 0, 0.0) == 0.0);
  CHECK(long_asymptote(k2, 0, 0.0) == 0.0);
  for (double t : {1e-4, 1e-3}) {
    CHECK(std::abs(short_asymptote(k2, 0, t) - 0.5 * std::abs(std::sin(2 * t))) <= 1e-15);
    CHECK(std::abs(short_asymptote(k2, 0, t) / t - 1.0) <= 2.0 * t * t);
  }

  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    const double n = static_cast<double>(g.size());
    const double t = 50.0 / s.fiedler();
    for (Node j = 0; j < g.size(); ++j) {
      CHECK(std::abs(long_asymptote(s, j, t) - (1.0 - 1.0 / n)) <= 0.02);
      CHECK(std::abs(conditional_distance(s, j, t) - long_asymptote(s, j, t)) <= 1e-2);
      CHECK(std::abs(delta(s, j, t) - 1.0 / n) <= 1e-2);
    }
  }
}

TEST_CASE("gamma ratios and delta") {
  const auto ring = spectrum(generate(GraphKind::Ring, 11));
  CHECK_FALSE(gamma_ratio(ring, Regime::Short, 0.0).has_value());
  CHECK_FALSE(gamma_ratio(ring, Regime::Long, 0.0).has_value());
  const auto report0 = asymptotics(ring, 0, 0.0);
  CHECK_FALSE(report0.gamma_s.has_value());
  CHECK_FALSE(report0.gamma_l.has_value());

  for (const auto& g : law_graphs()) {
    const auto s = spectrum(g);
    const auto gs = gamma_ratio(s, Regime::Short, 1e-4);
    REQUIRE(gs.has_value());
    CHECK(std::abs(*gs - 1.0) <= 1e-2);
    const double late = 50.0 / s.fiedler();
    const auto gl = gamma_ratio(s, Regime::Long, late);
    REQUIRE(gl.has_value());
    CHECK(std::abs(*gl - 1.0) <= 1e-6);
    CHECK(std::abs(delta_at_argmax(s, late) - 1.0 / static_cast<double>(g.size())) <= 1e-6);
  }
  CHECK(std::abs(delta_at_argmax(ring, 50.0 / ring.fiedler()) - 1.0 / 11.0) <= 1e-6);

  const auto star = spectrum(generate(GraphKind::Star, 6));
  const auto report = asymptotics(star, 2, 0.7);
  CHECK(report.short_value == short_asymptote(star, 2, 0.7));
  CHECK(report.long_value == long_asymptote(star, 2, 0.7));
  CHECK(report.delta == delta(star, 2, 0.7));
  CHECK(report.gamma_s == gamma_ratio(star, Regime::Short, 0.7));
  CHECK(report.gamma_l == gamma_ratio(star, Regime::Long, 0.7));
  CHECK_THROWS_AS(asymptotics(star, 6, 0.7), std::invalid_argument);
}

TEST_CASE("central node: complete, star and wheel coincide") {
  for (std::size_t n : {5, 8, 12}) {
    const auto k = spectrum(generate(GraphKind::Complete, n));
    const auto st = spectrum(generate(GraphKind::Star, n));
    const auto w = spectrum(generate(GraphKind::Wheel, n));
    for (double t : TimeGrid{1e-2, 30.0, 120, Spacing::Log}.points()) {
      const double dk = conditional_distance(k, 0, t);
      CHECK(std::abs(dk - conditional_distance(st, 0, t)) <= 1e-9);
      CHECK(std::abs(dk - conditional_distance(w, 0, t)) <= 1e-9);
    }
  }
}

TEST_CASE("localized optimality verifier") {
  SUBCASE("K2 uniform initial state") {
    const auto s = spectrum(generate(GraphKind::Complete, 2));
    const Eigen::VectorXd z = Eigen::VectorXd::Constant(2, 0.5);
    for (double t : {0.1, 0.5, 1.0, 3.0}) {
      // Both channels map I/2 to I/2; the 2x2 closed form gives 1.
      const auto rc = classical_channel(s, z, t);
      const auto rq = quantum_channel(s, z, t);
      const double oracle =
          testing::fidelity_2x2(Eigen::Matrix2cd(rc.matrix()), Eigen::Matrix2cd(rq.matrix()));
      CHECK(std::abs(oracle - 1.0) <= 1e-12);
      CHECK(std::abs(uhlmann_fidelity(rc, rq) - oracle) <= 1e-12);
      CHECK(uhlmann_fidelity(rc, rq) >=
            std::min(localized_fidelity(s, 0, t), localized_fidelity(s, 1, t)));
    }
  }
  SUBCASE("localized preparations reproduce F_j") {
    const auto s = spectrum(generate(GraphKind::Wheel, 6));
    const std::vector<double> times{0.1, 0.5, 1.0, 3.0};
    const auto report = verify_localized_optimality(s, 5, times, 1);
    CHECK(report.localized_mismatch <= 1e-9);
    CHECK(report.margins.size() == 20);
  }
  SUBCASE("Dirichlet samples never beat the localized minimum") {
    const std::vector<double> times{0.1, 0.5, 1.0, 3.0};
    std::size_t evaluated = 0;
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const std::size_t n = 3 + seed % 6;
      const auto g = testing::random_graph(n, 0.3, seed + 100);
      const auto report = verify_localized_optimality(spectrum(g), 9, times, seed);
      evaluated += report.margins.size() / times.size();
      CHECK(report.worst_violation >= -1e-8);
      CHECK(report.localized_mismatch <= 1e-9);
      for (const auto& m : report.margins) {
        CHECK(m.margin == doctest::Approx(m.fidelity - m.localized_minimum));
      }
    }
    CHECK(evaluated >= 200);
  }
  SUBCASE("seeded sampling is reproducible") {
    const auto s = spectrum(generate(GraphKind::Path, 5));
    const std::vector<double> times{0.5};
    const auto a = verify_localized_optimality(s, 4, times, 42);
    const auto b = verify_localized_optimality(s, 4, times, 42);
    for (std::size_t i = 0; i < a.margins.size(); ++i) {
      CHECK(a.margins[i].fidelity == b.margins[i].fidelity);
    }
  }
  SUBCASE("a faulty fidelity routine is caught") {
    const auto s = spectrum(generate(GraphKind::Star, 5));
    const std::vector<double> times{0.5, 1.0};
    const auto report = verify_localized_optimality(
        s, 10, times, 0, [](const DensityMatrix& a, const DensityMatrix& b) {
          return 0.5 * uhlmann_fidelity(a, b);
        });
    CHECK(report.localized_mismatch > 0.1);
    const auto blind = verify_localized_optimality(
        s, 10, times, 0, [](const DensityMatrix&, const DensityMatrix&) { return 0.0; });
    CHECK(blind.worst_violation < -1e-8);
  }
  SUBCASE("bad arguments") {
    const auto s = spectrum(generate(GraphKind::Star, 5));
    const std::vector<double> bad{-1.0};
    CHECK_THROWS_AS(verify_localized_optimality(s, 1, bad, 0), std::invalid_argument);
    const std::vector<double> ok{1.0};
    CHECK_THROWS_AS(verify_localized_optimality(s, 0, ok, 0), std::invalid_argument);
  }
}
