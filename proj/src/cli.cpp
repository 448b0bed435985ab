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

#include "qcwalk/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qcwalk/distance.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/figures.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/sweep.hpp"
#include "qcwalk/verify_suite.hpp"

namespace qcwalk {

namespace {

struct GraphArgs {
  std::string kind;
  std::size_t n = 0;
  std::optional<std::size_t> extra;
  std::uint64_t seed = 0;
  std::string out = "-";
};

struct DistanceArgs {
  std::string graph;
  std::string edges;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<std::size_t> steps;
  bool log = false;
  bool linear = false;
  std::vector<double> times;
  std::uint64_t seed = 0;
  std::optional<std::size_t> node;
  std::string out = "-";
  std::string quantities = "qc";
  unsigned workers = 1;
};

struct FigureArgs {
  std::string which;
  std::uint64_t seed = 0;
  std::string out_dir = "figures";
  std::size_t center_n = 8;
  unsigned workers = 1;
};

struct VerifyArgs {
  std::size_t n_max = 8;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  bool tamper = false;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
  const Graph g = generate(parse_graph_kind(a.kind), a.n, a.extra, a.seed);
  const auto best = max_degree(g);
  const double fiedler = g.size() >= 2 ? fiedler_value(g) : 0.0;
  std::ostringstream stats;
  stats << "n " << g.size() << '\n'
        << "edges " << g.edge_count() << '\n'
        << "max_degree " << best.degree << " (node " << best.node << ")\n"
        << "fiedler " << format_value(fiedler) << '\n';
  if (a.out == "-") {
    std::istringstream lines(stats.str());
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
    write_edge_list(out, g);
  } else {
    write_edge_list_file(a.out, g);
    out << stats.str();
  }
  return kExitOk;
}

int cmd_distance(const DistanceArgs& a, std::ostream& out) {
  GraphSource source;
  if (!a.graph.empty()) source.generator = a.graph;
  if (!a.edges.empty()) source.edges_path = a.edges;
  const Graph g = load_graph(source, a.seed);
  const auto spec = eigendecompose(laplacian(g));
  if (!spec.connected()) throw DisconnectedGraphError();

  std::vector<double> times = a.times;
  if (times.empty()) {
    TimeGrid grid = default_grid(spec.fiedler());
    if (a.t_min) grid.t_min = *a.t_min;
    if (a.t_max) grid.t_max = *a.t_max;
    if (a.steps) grid.steps = *a.steps;
    if (a.linear) grid.spacing = Spacing::Linear;
    times = grid.points();
  }
  const auto outputs = parse_quantities(a.quantities);
  if (a.out == "-") {
    write_distance_csv(out, spec, times, outputs, a.node, a.workers);
  } else {
    std::ofstream file(a.out);
    if (!file) throw std::runtime_error("cannot open '" + a.out + "' for writing");
    write_distance_csv(file, spec, times, outputs, a.node, a.workers);
    if (!file) throw std::runtime_error("write to '" + a.out + "' failed");
  }
  return kExitOk;
}

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  const FigureOptions options{a.seed, a.center_n, a.workers};
  const auto presets =
      a.which == "all" ? all_figure_presets() : std::vector{parse_figure_preset(a.which)};
  for (const auto preset : presets) {
    const auto curves = write_figure(preset, a.out_dir, options);
    out << to_string(preset) << ": " << curves.size() << " curves -> " << a.out_dir << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.n_max = a.n_max;
  options.samples = a.samples;
  options.seed = a.seed;
  if (a.tamper) {
    options.fidelity = [](const DensityMatrix& x, const DensityMatrix& y) {
      return 0.5 * uhlmann_fidelity(x, y);
    };
  }
  const auto result = run_verify_suite(options, out);
  return result.passed ? kExitOk : kExitVerification;
}

std::vector<std::string> reversed(const std::vector<std::string>& args) {
  return {args.rbegin(), args.rend()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-classical dynamical distance of continuous-time walks on graphs", "qcwalk"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Generate a graph and write it as an edge list");
  graph->add_option("kind", graph_args.kind, "complete, ring, path, star, wheel or random")
      ->required();
  graph->add_option("n", graph_args.n, "Number of nodes")->required();
  graph->add_option("--extra,-d", graph_args.extra, "Target degree of node 1 (random graphs)");
  graph->add_option("--seed", graph_args.seed, "Generator seed");
  graph->add_option("--out,-o", graph_args.out, "Output path, '-' for standard output");

  DistanceArgs dist_args;
  auto* dist = app.add_subcommand("distance", "Sweep the QC-distance and related quantities");
  auto* g_opt = dist->add_option("--graph", dist_args.graph, "Generator spec kind:n[:extra]");
  auto* e_opt = dist->add_option("--edges", dist_args.edges, "Edge-list file");
  g_opt->excludes(e_opt);
  dist->add_option("--tmin", dist_args.t_min, "First time (default 1e-2)");
  dist->add_option("--tmax", dist_args.t_max, "Last time (default ceil(100 / Fiedler value))");
  dist->add_option("--steps", dist_args.steps, "Number of grid intervals (default 399)");
  auto* log_flag = dist->add_flag("--log", dist_args.log, "Log-spaced grid (default)");
  auto* lin_flag = dist->add_flag("--linear", dist_args.linear, "Linearly spaced grid");
  log_flag->excludes(lin_flag);
  dist->add_option("--times", dist_args.times, "Explicit comma-separated times")->delimiter(',');
  dist->add_option("--seed", dist_args.seed, "Seed for random graph specs");
  dist->add_option("--node", dist_args.node, "Report node-level quantities for this node only");
  dist->add_option("--out,-o", dist_args.out, "Output path, '-' for standard output");
  dist->add_option("--quantities,-q", dist_args.quantities,
                   "Comma list from conditional,qc,average,coherence,gfid,short,long,gamma_s,"
                   "gamma_l,delta");
  dist->add_option("--workers,-j", dist_args.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));

  FigureArgs fig_args;
  auto* fig = app.add_subcommand("figure", "Write the CSV data behind a figure preset");
  fig->add_option("which", fig_args.which,
                  "fig1-left, fig1-center, fig1-right, fig2, fig3-left, fig3-right or all")
      ->required();
  fig->add_option("--seed", fig_args.seed, "Seed for the random graph families");
  fig->add_option("--out-dir,-o", fig_args.out_dir, "Directory for the CSV files");
  fig->add_option("--n", fig_args.center_n, "Graph size of the complete/star/wheel panels")
      ->check(CLI::Range(std::size_t{4}, std::size_t{500}));
  fig->add_option("--workers,-j", fig_args.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Check localized-state optimality and invariants");
  ver->add_option("--n-max", ver_args.n_max, "Largest graph size (at most 10)");
  ver->add_option("--samples", ver_args.samples, "Dirichlet-sampled initial states");
  ver->add_option("--seed", ver_args.seed, "Sampling seed");
  ver->add_flag("--tamper", ver_args.tamper, "Halve every fidelity (negative control)")
      ->group("");

  try {
    auto argv = reversed(args);
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*graph) return cmd_graph(graph_args, out);
    if (*dist) {
      if (dist_args.graph.empty() == dist_args.edges.empty()) {
        err << "distance: give exactly one of --graph or --edges\n";
        return kExitUsage;
      }
      return cmd_distance(dist_args, out);
    }
    if (*fig) return cmd_figure(fig_args, out);
    if (*ver) {
      if (ver_args.n_max > kMaxVerifyNodes) {
        err << "verify: --n-max " << ver_args.n_max << " exceeds the supported maximum of "
            << kMaxVerifyNodes << '\n';
        return kExitUsage;
      }
      return cmd_verify(ver_args, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace qcwalk
