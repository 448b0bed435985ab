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

#include "qcwalk/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qcwalk/distance.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/parallel.hpp"

namespace qcwalk {

namespace {

constexpr struct {
  Quantity quantity;
  std::string_view name;
} kQuantityNames[] = {
    {Quantity::Conditional, "conditional"}, {Quantity::Qc, "qc"},
    {Quantity::Average, "average"},         {Quantity::Coherence, "coherence"},
    {Quantity::Gfid, "gfid"},               {Quantity::Short, "short"},
    {Quantity::Long, "long"},               {Quantity::GammaS, "gamma_s"},
    {Quantity::GammaL, "gamma_l"},          {Quantity::Delta, "delta"},
};

bool per_node(Quantity q) {
  switch (q) {
    case Quantity::Conditional:
    case Quantity::Coherence:
    case Quantity::Gfid:
    case Quantity::Short:
    case Quantity::Long:
      return true;
    default:
      return false;
  }
}

double node_value(const NodeDiagnostics& d, Quantity q) {
  switch (q) {
    case Quantity::Conditional: return d.conditional;
    case Quantity::Coherence: return d.coherence;
    case Quantity::Gfid: return d.gfid;
    case Quantity::Short: return d.short_value;
    case Quantity::Long: return d.long_value;
    case Quantity::Delta: return d.delta;
    default: break;
  }
  throw std::logic_error("not a node-level quantity");
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_value(*v) : std::string("NA");
}

}  // namespace

std::string_view to_string(Quantity q) {
  for (const auto& entry : kQuantityNames) {
    if (entry.quantity == q) return entry.name;
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (const auto& entry : kQuantityNames) {
    if (entry.name == name) return entry.quantity;
  }
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

std::vector<Quantity> parse_quantities(std::string_view list) {
  std::vector<Quantity> out;
  while (true) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    const auto q = parse_quantity(item);
    if (std::find(out.begin(), out.end(), q) != out.end()) {
      throw std::invalid_argument("quantity '" + std::string(item) + "' requested twice");
    }
    out.push_back(q);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto colon = text.find(':');
    parts.push_back(text.substr(0, colon));
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("graph spec must look like kind:n[:extra]");
  }
  GeneratorSpec spec{parse_graph_kind(parts[0]), parse_size(parts[1], "node count"), std::nullopt};
  if (parts.size() == 3) spec.extra = parse_size(parts[2], "degree target");
  return spec;
}

Graph load_graph(const GraphSource& source, std::uint64_t seed) {
  if (source.generator.has_value() == source.edges_path.has_value()) {
    throw std::invalid_argument("give exactly one of a generator spec or an edge-list path");
  }
  if (source.edges_path) return read_edge_list_file(*source.edges_path);
  const auto spec = parse_generator_spec(*source.generator);
  return generate(spec.kind, spec.n, spec.extra, seed);
}

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_distance_csv(std::ostream& out, const SpectralDecomposition& spec,
                        std::span<const double> times, std::span<const Quantity> outputs,
                        std::optional<Node> node, unsigned workers) {
  if (!spec.connected()) throw DisconnectedGraphError();
  if (outputs.empty()) throw std::invalid_argument("at least one output quantity is required");
  if (times.empty()) throw std::invalid_argument("time grid is empty");
  const std::size_t n = spec.size();
  if (node && *node >= n) {
    throw std::invalid_argument("node " + std::to_string(*node) + " out of range for graph of size " +
                                std::to_string(n));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw std::invalid_argument("times must be nonnegative");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("times must be strictly increasing");
    }
  }

  out << 't';
  for (const auto q : outputs) {
    if (per_node(q) && !node) {
      for (Node j = 0; j < n; ++j) out << ',' << to_string(q) << '_' << j;
    } else {
      out << ',' << to_string(q);
    }
  }
  out << '\n';

  std::vector<std::string> rows(times.size());
  parallel_for(times.size(), workers, [&](std::size_t i) {
    const double t = times[i];
    const auto nodes = node_diagnostics(spec, t);
    const auto graph = reduce_diagnostics(nodes);
    std::string row = format_value(t);
    for (const auto q : outputs) {
      switch (q) {
        case Quantity::Qc: row += ',' + format_value(graph.qc.value); break;
        case Quantity::Average: row += ',' + format_value(graph.average); break;
        case Quantity::GammaS: row += ',' + format_optional(graph.gamma_s); break;
        case Quantity::GammaL: row += ',' + format_optional(graph.gamma_l); break;
        case Quantity::Delta:
          row += ',' + format_value(nodes[node.value_or(graph.qc.argmax)].delta);
          break;
        default:
          if (node) {
            row += ',' + format_value(node_value(nodes[*node], q));
          } else {
            for (Node j = 0; j < n; ++j) row += ',' + format_value(node_value(nodes[j], q));
          }
      }
    }
    row += '\n';
    rows[i] = std::move(row);
  });
  for (const auto& row : rows) out << row;
}

std::vector<double> resolve_times(const RunConfig& config, const SpectralDecomposition& spec) {
  if (!config.times.empty()) return config.times;
  if (config.grid) return config.grid->points();
  if (!spec.connected()) throw DisconnectedGraphError();
  return default_grid(spec.fiedler()).points();
}

void run_distance(const RunConfig& config, std::ostream& out) {
  const Graph g = load_graph(config.graph, config.seed);
  const auto spec = eigendecompose(laplacian(g));
  if (!spec.connected()) throw DisconnectedGraphError();
  const auto times = resolve_times(config, spec);
  write_distance_csv(out, spec, times, config.outputs, config.node, config.workers);
}

}  // namespace qcwalk
