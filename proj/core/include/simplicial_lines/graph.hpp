// Copyright 2026 The simplicial-lines Authors
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

#ifndef SIMPLICIAL_LINES_GRAPH_HPP_
#define SIMPLICIAL_LINES_GRAPH_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "simplicial_lines/face.hpp"

namespace simplicial_lines {

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<Vertex, 3>;

enum class DuplicatePolicy { kReject, kDedupe };

// Finite simple graph on the vertex range 1..n. Immutable once built.
class SimpleGraph {
 public:
  // The graph with no vertices.
  SimpleGraph() = default;

  // Validates and builds the graph. Throws GraphError on a loop, an
  // out-of-range endpoint, or (under kReject) a repeated edge.
  SimpleGraph(int vertex_count, std::span<const std::pair<int, int>> edges,
              DuplicatePolicy policy = DuplicatePolicy::kReject);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;

  // Sorted neighbour list of a vertex in 1..n.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;

  // 0 for the graph with no vertices.
  int min_degree() const;
  std::vector<Vertex> isolated_vertices() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

SimpleGraph make_graph(int vertex_count,
                       std::span<const std::pair<int, int>> edges,
                       DuplicatePolicy policy = DuplicatePolicy::kReject);
SimpleGraph make_graph(int vertex_count,
                       std::initializer_list<std::pair<int, int>> edges,
                       DuplicatePolicy policy = DuplicatePolicy::kReject);

// All 3-subsets whose three pairs are edges, sorted lexicographically.
std::vector<Triangle> triangles(const SimpleGraph& g);

// Isolated vertices count as their own components.
std::size_t connected_component_count(const SimpleGraph& g);
bool is_connected_graph(const SimpleGraph& g);

// Largest vertex count accepted by exhaustive enumeration.
inline constexpr int kMaxEnumerationVertices = 6;

// Visits every labelled graph on n vertices whose minimum degree is at
// least `min_degree`. Edge subsets are visited in increasing bitmask order
// over the lexicographically sorted candidate pairs.
void for_each_graph(int n, int min_degree,
                    const std::function<void(const SimpleGraph&)>& visit);
std::vector<SimpleGraph> enumerate_graphs(int n, int min_degree);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_GRAPH_HPP_
