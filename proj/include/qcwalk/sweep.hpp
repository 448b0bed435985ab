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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/time_grid.hpp"

namespace qcwalk {

enum class Quantity {
  Conditional,
  Qc,
  Average,
  Coherence,
  Gfid,
  Short,
  Long,
  GammaS,
  GammaL,
  Delta,
};

std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view name);
/// Comma-separated list, e.g. "qc,average,gamma_s". Duplicates are rejected.
std::vector<Quantity> parse_quantities(std::string_view list);

/// Graph given either as a generator spec "kind:n[:extra]" or an edge-list
/// file.
struct GraphSource {
  std::optional<std::string> generator;
  std::optional<std::string> edges_path;
};

struct GeneratorSpec {
  GraphKind kind;
  std::size_t n;
  std::optional<std::size_t> extra;
};

GeneratorSpec parse_generator_spec(std::string_view text);
Graph load_graph(const GraphSource& source, std::uint64_t seed);

struct RunConfig {
  GraphSource graph;
  /// Explicit grid; the default grid for the graph is used when empty and
  /// `times` is empty too.
  std::optional<TimeGrid> grid;
  /// Explicit time list; takes precedence over `grid`.
  std::vector<double> times;
  std::uint64_t seed = 0;
  std::vector<Quantity> outputs{Quantity::Qc};
  std::optional<Node> node;
  unsigned workers = 1;
};

/// "%.12g" formatting used for every floating-point CSV cell.
std::string format_value(double value);

/// Writes the sweep as CSV: header `t,<columns>`, then one row per time.
///
/// Node-level quantities (conditional, coherence, gfid, short, long) yield a
/// single column when `node` is set and one `<name>_<j>` column per node
/// otherwise. delta is taken at `node` when set and at the argmax node of
/// D_QC(t) otherwise. Undefined gamma ratios are written as `NA`. The output
/// does not depend on `workers`.
void write_distance_csv(std::ostream& out, const SpectralDecomposition& spec,
                        std::span<const double> times, std::span<const Quantity> outputs,
                        std::optional<Node> node, unsigned workers = 1);

/// Loads the graph, resolves the grid and writes the CSV. Throws
/// DisconnectedGraphError for disconnected graphs and std::invalid_argument
/// for a bad node or configuration.
void run_distance(const RunConfig& config, std::ostream& out);

/// Times requested by `config` for a graph with the given spectrum.
std::vector<double> resolve_times(const RunConfig& config, const SpectralDecomposition& spec);

}  // namespace qcwalk
