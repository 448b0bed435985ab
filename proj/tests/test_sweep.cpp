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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcwalk/distance.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/figures.hpp"
#include "qcwalk/sweep.hpp"
#include "qcwalk/time_grid.hpp"
#include "qcwalk/verify_suite.hpp"

using namespace qcwalk;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qcwalk_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("time grids") {
  const auto lin = TimeGrid{0.0, 2.0, 4, Spacing::Linear}.points();
  CHECK(lin == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});

  const auto log = TimeGrid{1e-2, 10.0, 3, Spacing::Log}.points();
  REQUIRE(log.size() == 4);
  CHECK(log.front() == 1e-2);
  CHECK(log.back() == 10.0);
  CHECK(log[1] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(log[2] == doctest::Approx(1.0).epsilon(1e-12));

  const auto one = TimeGrid{1.0, 2.0, 1, Spacing::Linear}.points();
  CHECK(one == std::vector<double>{1.0, 2.0});

  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 10, Spacing::Log}.points()), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{1.0, 1.0, 10, Spacing::Linear}.points()), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{-1.0, 1.0, 10, Spacing::Linear}.points()), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0, Spacing::Linear}.points()), std::invalid_argument);

  const auto def = default_grid(0.3174929343376376);
  CHECK(def.t_min == 1e-2);
  CHECK(def.t_max == 315.0);
  CHECK(def.points().size() == 400);
  CHECK(def.spacing == Spacing::Log);
  CHECK_THROWS_AS(default_grid(0.0), std::invalid_argument);
}

TEST_CASE("quantity and generator spec parsing") {
  CHECK(parse_quantities("qc") == std::vector<Quantity>{Quantity::Qc});
  CHECK(parse_quantities("conditional,gamma_s,delta") ==
        std::vector<Quantity>{Quantity::Conditional, Quantity::GammaS, Quantity::Delta});
  CHECK_THROWS_AS(parse_quantities("qc,qc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quantities("qc,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quantities(""), std::invalid_argument);
  for (auto q : parse_quantities("conditional,qc,average,coherence,gfid,short,long,gamma_s,gamma_l,delta")) {
    CHECK(parse_quantity(to_string(q)) == q);
  }

  const auto spec = parse_generator_spec("random:11:4");
  CHECK(spec.kind == GraphKind::RandomConnected);
  CHECK(spec.n == 11);
  CHECK(spec.extra == 4u);
  CHECK_FALSE(parse_generator_spec("ring:7").extra.has_value());
  CHECK_THROWS_AS(parse_generator_spec("ring"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("ring:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("blob:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("ring:5:1:2"), std::invalid_argument);

  CHECK_THROWS_AS(load_graph(GraphSource{}, 0), std::invalid_argument);
}

TEST_CASE("value formatting") {
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(0.8) == "0.8");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(1e-3) == "0.001");
  CHECK(format_value(1234567.0) == "1234567");
}

TEST_CASE("distance CSV layout") {
  const auto k2 = eigendecompose(laplacian(generate(GraphKind::Complete, 2)));
  {
    std::ostringstream out;
    const std::vector<double> t{0.0};
    const std::vector<Quantity> q{Quantity::Qc};
    write_distance_csv(out, k2, t, q, std::nullopt);
    CHECK(out.str() == "t,qc\n0,0\n");
  }
  {
    std::ostringstream out;
    const std::vector<double> t{0.0, 1.0};
    const std::vector<Quantity> q{Quantity::Conditional, Quantity::GammaS, Quantity::Delta};
    write_distance_csv(out, k2, t, q, std::nullopt);
    const auto rows = parse_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"t", "conditional_0", "conditional_1", "gamma_s",
                                              "delta"});
    CHECK(rows[1][3] == "NA");
    CHECK(rows[1][4] == "1");
    CHECK(rows[2][1] == format_value(conditional_distance(k2, 0, 1.0)));
  }
  {
    std::ostringstream out;
    const std::vector<double> t{0.5};
    const std::vector<Quantity> q{Quantity::Coherence, Quantity::Delta};
    write_distance_csv(out, k2, t, q, Node{1});
    const auto rows = parse_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"t", "coherence", "delta"});
    CHECK(rows[1][1] == format_value(std::abs(std::sin(1.0))));
    CHECK(rows[1][2] == format_value(delta(k2, 1, 0.5)));
  }
  std::ostringstream sink;
  const std::vector<double> t{1.0};
  const std::vector<Quantity> q{Quantity::Qc};
  const std::vector<Quantity> none;
  CHECK_THROWS_AS(write_distance_csv(sink, k2, t, q, Node{2}), std::invalid_argument);
  CHECK_THROWS_AS(write_distance_csv(sink, k2, t, none, std::nullopt), std::invalid_argument);
  const auto split = eigendecompose(laplacian(graph_from_edges(3, {{0, 1}})));
  CHECK_THROWS_AS(write_distance_csv(sink, split, t, q, std::nullopt), DisconnectedGraphError);
}

TEST_CASE("distance CSV values") {
  RunConfig config;
  config.graph.generator = "complete:5";
  config.times = {10.0};
  config.outputs = {Quantity::Qc};
  std::ostringstream out;
  run_distance(config, out);
  const auto rows = parse_csv(out.str());
  CHECK(std::abs(std::stod(rows[1][1]) - 0.8) <= 1e-3);

  config.graph.generator = "ring:11";
  config.times.clear();
  config.grid = TimeGrid{1e-2, 50.0, 60, Spacing::Log};
  config.outputs = {Quantity::Qc, Quantity::Average};
  std::ostringstream ring;
  run_distance(config, ring);
  const auto ring_rows = parse_csv(ring.str());
  CHECK(ring_rows.size() == 62);
  for (std::size_t i = 1; i < ring_rows.size(); ++i) {
    CHECK(std::abs(std::stod(ring_rows[i][1]) - std::stod(ring_rows[i][2])) <= 1e-12);
  }
}

TEST_CASE("distance CSV is deterministic and independent of worker count") {
  RunConfig config;
  config.graph.generator = "random:11:6";
  config.seed = 17;
  config.outputs = parse_quantities("conditional,qc,average,coherence,gfid,short,long,gamma_s,gamma_l,delta");
  std::ostringstream first;
  run_distance(config, first);
  std::ostringstream second;
  run_distance(config, second);
  CHECK(first.str() == second.str());
  config.workers = 6;
  std::ostringstream threaded;
  run_distance(config, threaded);
  CHECK(first.str() == threaded.str());
  CHECK(parse_csv(first.str()).size() == 401);
}

TEST_CASE("edge-list sources") {
  const auto dir = scratch_dir("edges");
  std::filesystem::create_directories(dir);
  const auto path = (dir / "wheel.edges").string();
  write_edge_list_file(path, generate(GraphKind::Wheel, 6));

  RunConfig from_file;
  from_file.graph.edges_path = path;
  from_file.times = {0.0, 0.4, 2.0};
  from_file.outputs = {Quantity::Qc, Quantity::Average};
  RunConfig generated = from_file;
  generated.graph = GraphSource{std::string("wheel:6"), std::nullopt};
  std::ostringstream a;
  std::ostringstream b;
  run_distance(from_file, a);
  run_distance(generated, b);
  CHECK(a.str() == b.str());

  std::ofstream(dir / "split.edges") << "4\n0 1\n2 3\n";
  RunConfig split;
  split.graph.edges_path = (dir / "split.edges").string();
  std::ostringstream sink;
  CHECK_THROWS_AS(run_distance(split, sink), DisconnectedGraphError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure presets") {
  const auto dir = scratch_dir("figures");
  FigureOptions options;
  options.seed = 0;
  options.workers = 4;

  SUBCASE("fig1-left plateaus") {
    const auto curves = write_figure(FigurePreset::Fig1Left, dir, options);
    REQUIRE(curves.size() == 3);
    const double expected[] = {0.8, 0.9, 0.95};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto rows = parse_csv(read_file(dir / curves[i].file));
      CHECK(rows.size() == 401);
      CHECK(std::abs(std::stod(rows.back()[1]) - expected[i]) <= 1e-3);
    }
    const auto manifest = parse_csv(read_file(dir / "fig1-left_manifest.csv"));
    CHECK(manifest.size() == 4);
    CHECK(manifest[0][0] == "file");
    CHECK(manifest[1][1] == "complete");
  }
  SUBCASE("fig1-center curves coincide") {
    const auto curves = write_figure(FigurePreset::Fig1Center, dir, options);
    REQUIRE(curves.size() == 3);
    const auto a = parse_csv(read_file(dir / curves[0].file));
    for (std::size_t c = 1; c < 3; ++c) {
      const auto b = parse_csv(read_file(dir / curves[c].file));
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(std::abs(std::stod(a[i][1]) - std::stod(b[i][1])) <= 1e-9);
      }
    }
  }
  SUBCASE("fig3-right converges to 1/n") {
    const auto curves = write_figure(FigurePreset::Fig3Right, dir, options);
    for (const auto& curve : curves) {
      const auto rows = parse_csv(read_file(dir / curve.file));
      CHECK(std::abs(std::stod(rows.back()[1]) - 1.0 / static_cast<double>(curve.n)) <= 1e-2);
    }
  }
  SUBCASE("every preset writes what it lists") {
    for (const auto preset : all_figure_presets()) {
      CHECK(parse_figure_preset(to_string(preset)) == preset);
      const auto curves = write_figure(preset, dir, options);
      CHECK_FALSE(curves.empty());
      for (const auto& curve : curves) CHECK(std::filesystem::exists(dir / curve.file));
      CHECK(std::filesystem::exists(dir / (std::string(to_string(preset)) + "_manifest.csv")));
    }
    CHECK_THROWS_AS(parse_figure_preset("fig9"), std::invalid_argument);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("invariant checks and the verification suite") {
  for (const auto& check : check_invariants(generate(GraphKind::Wheel, 7), {0.1, 1.0, 3.0})) {
    INFO(check.name);
    CHECK(check.passed());
  }

  const auto graphs = verification_graphs(8, 0);
  CHECK(graphs.size() == 6 * 3 + 5);
  for (const auto& g : graphs) CHECK(is_connected(g));

  std::ostringstream log;
  const auto result = run_verify_suite(VerifyOptions{}, log);
  CHECK(result.passed);
  CHECK(result.worst_margin >= -1e-8);
  CHECK(result.localized_mismatch <= 1e-9);
  CHECK(result.evaluations >= 200 * 4);
  CHECK(log.str().find("verification passed") != std::string::npos);

  VerifyOptions tampered;
  tampered.fidelity = [](const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * uhlmann_fidelity(a, b);
  };
  std::ostringstream bad_log;
  const auto bad = run_verify_suite(tampered, bad_log);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.failures.empty());
  CHECK(bad_log.str().find("FAIL") != std::string::npos);

  VerifyOptions too_big;
  too_big.n_max = 12;
  CHECK_THROWS_AS(run_verify_suite(too_big, log), std::invalid_argument);
}
