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

#include "qcwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qcwalk/random.hpp"
#include "qcwalk/spectral.hpp"

namespace qcwalk {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void require_node(const Graph& g, Node j) {
  if (j >= g.size()) {
    throw std::invalid_argument("node " + std::to_string(j) + " out of range for graph of size " +
                                std::to_string(g.size()));
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw std::invalid_argument("edge " + edge_str(e) + " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (e.first == e.second) throw std::invalid_argument("self-loop " + edge_str(e));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + edge_str(*dup));
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

const std::vector<Node>& Graph::neighbors(Node j) const {
  require_node(*this, j);
  return adjacency_[j];
}

Graph graph_from_edges(std::size_t n, std::vector<Edge> edges) {
  return Graph(n, std::move(edges));
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Complete: return "complete";
    case GraphKind::Ring: return "ring";
    case GraphKind::Path: return "path";
    case GraphKind::Star: return "star";
    case GraphKind::Wheel: return "wheel";
    case GraphKind::RandomConnected: return "random";
  }
  return "unknown";
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "complete") return GraphKind::Complete;
  if (name == "ring" || name == "cycle") return GraphKind::Ring;
  if (name == "path") return GraphKind::Path;
  if (name == "star") return GraphKind::Star;
  if (name == "wheel") return GraphKind::Wheel;
  if (name == "random" || name == "random_connected") return GraphKind::RandomConnected;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

namespace {

std::vector<Edge> ring_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (Node j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  return edges;
}

Graph random_connected(std::size_t n, std::size_t target, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random graph requires n >= 3");
  if (target < 2 || target > n - 1) {
    throw std::invalid_argument("degree target " + std::to_string(target) +
                                " for node 1 must lie in [2, " + std::to_string(n - 1) + "]");
  }
  auto edges = ring_edges(n);
  // Non-neighbours of node 1 in the ring, ascending.
  std::vector<Node> pool;
  for (Node k = 0; k < n; ++k) {
    if (k != 0 && k != 1 && k != 2) pool.push_back(k);
  }
  Rng rng(seed);
  // Partial Fisher-Yates: the first (target - 2) slots end up uniform
  // without replacement.
  const std::size_t picks = target - 2;
  for (std::size_t i = 0; i < picks; ++i) {
    const auto r = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[r]);
    edges.emplace_back(1, pool[i]);
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph generate(GraphKind kind, std::size_t n, std::optional<std::size_t> extra,
               std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("graph size must be positive");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Complete:
      for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphKind::Ring:
      if (n < 3) throw std::invalid_argument("ring requires n >= 3");
      edges = ring_edges(n);
      break;
    case GraphKind::Path:
      for (Node j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
      break;
    case GraphKind::Star:
      if (n < 2) throw std::invalid_argument("star requires n >= 2");
      for (Node j = 1; j < n; ++j) edges.emplace_back(0, j);
      break;
    case GraphKind::Wheel:
      if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
      for (Node j = 1; j < n; ++j) {
        edges.emplace_back(0, j);
        edges.emplace_back(j, j + 1 < n ? j + 1 : 1);
      }
      break;
    case GraphKind::RandomConnected:
      if (!extra) throw std::invalid_argument("random graph requires a degree target for node 1");
      return random_connected(n, *extra, seed);
  }
  return Graph(n, std::move(edges));
}

Laplacian::Laplacian(const Graph& g)
    : matrix_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.size()),
                                    static_cast<Eigen::Index>(g.size()))) {
  for (const auto& [u, v] : g.edges()) {
    const auto a = static_cast<Eigen::Index>(u);
    const auto b = static_cast<Eigen::Index>(v);
    matrix_(a, b) = 1.0;
    matrix_(b, a) = 1.0;
    matrix_(a, a) -= 1.0;
    matrix_(b, b) -= 1.0;
  }
}

Laplacian laplacian(const Graph& g) { return Laplacian(g); }

std::size_t degree(const Graph& g, Node j) { return g.neighbors(j).size(); }

MaxDegree max_degree(const Graph& g) {
  MaxDegree best{degree(g, 0), 0};
  for (Node j = 1; j < g.size(); ++j) {
    if (const auto d = degree(g, j); d > best.degree) best = {d, j};
  }
  return best;
}

double average_degree(const Graph& g) {
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.size());
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::queue<Node> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Node u = frontier.front();
    frontier.pop();
    for (const Node v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == g.size();
}

double fiedler_value(const Graph& g) {
  if (g.size() < 2) throw std::invalid_argument("Fiedler value requires n >= 2");
  return eigendecompose(laplacian(g)).fiedler();
}

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto fail = [&] {
      throw std::invalid_argument("malformed edge list at line " + std::to_string(lineno) +
                                  ": '" + line + "'");
    };
    if (!n) {
      long long value = 0;
      if (!(fields >> value) || value <= 0) fail();
      n = static_cast<std::size_t>(value);
    } else {
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v) || u < 0 || v < 0) fail();
      edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    }
    std::string rest;
    if (fields >> rest) fail();
  }
  if (!n) throw std::invalid_argument("edge list has no node count");
  return Graph(*n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace qcwalk
