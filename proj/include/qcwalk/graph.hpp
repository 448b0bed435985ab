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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qcwalk {

using Node = std::size_t;
using Edge = std::pair<Node, Node>;

/// Finite undirected simple graph. Edges are stored canonically as (u, v)
/// with u < v, sorted lexicographically. Immutable after construction.
class Graph {
 public:
  /// Rejects self-loops, out-of-range endpoints and duplicate edges (in
  /// either orientation) with std::invalid_argument.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Node>& neighbors(Node j) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
};

Graph graph_from_edges(std::size_t n, std::vector<Edge> edges);

enum class GraphKind { Complete, Ring, Path, Star, Wheel, RandomConnected };

std::string_view to_string(GraphKind kind);
/// Accepts the names used on the command line: complete, ring, path, star,
/// wheel, random (or random_connected).
GraphKind parse_graph_kind(std::string_view name);

/// Deterministic generator for the supported families.
///
/// Star and wheel use node 0 as the hub. Wheel rim nodes 1..n-1 form a
/// cycle. For RandomConnected, `extra` is the target degree of node 1: the
/// graph starts as a ring and node 1 is joined to (extra - 2) of its
/// non-neighbours drawn uniformly without replacement with `Rng` (random.hpp).
/// No other edges are added.
Graph generate(GraphKind kind, std::size_t n, std::optional<std::size_t> extra = std::nullopt,
               std::uint64_t seed = 0);

/// Laplacian in the sign convention L_jk = 1 on edges, L_jj = -d_j.
/// Every eigenvalue is <= 0.
class Laplacian {
 public:
  explicit Laplacian(const Graph& g);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  Eigen::MatrixXd matrix_;
};

Laplacian laplacian(const Graph& g);

std::size_t degree(const Graph& g, Node j);

struct MaxDegree {
  std::size_t degree;
  Node node;
};
/// Ties go to the smallest node index.
MaxDegree max_degree(const Graph& g);
double average_degree(const Graph& g);

bool is_connected(const Graph& g);

/// Magnitude of the smallest nonzero Laplacian eigenvalue (algebraic
/// connectivity). Returns exactly 0 for disconnected graphs. Requires n >= 2.
double fiedler_value(const Graph& g);

// Edge-list text format: first non-comment line holds the node count, each
// following line "u v". Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace qcwalk
