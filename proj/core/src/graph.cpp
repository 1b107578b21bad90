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

#include "simplicial_lines/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

namespace {

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

SimpleGraph::SimpleGraph(int vertex_count,
                         std::span<const std::pair<int, int>> edges,
                         DuplicatePolicy policy)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw GraphError(GraphError::Kind::kInvalidParameter,
                     "vertex count must be non-negative");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw GraphError(GraphError::Kind::kLoopEdge,
                       "loop edge " + pair_text(a, b));
    }
    if (a < 1 || b < 1 || a > vertex_count || b > vertex_count) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "edge " + pair_text(a, b) + " has an endpoint outside 1.." +
                           std::to_string(vertex_count));
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    if (policy == DuplicatePolicy::kReject) {
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge " + pair_text(dup->u, dup->v));
    }
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  adjacency_.assign(static_cast<std::size_t>(vertex_count) + 1, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a < 1 || b < 1 || a > vertex_count_ || b > vertex_count_) {
    return false;
  }
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

const std::vector<Vertex>& SimpleGraph::neighbors(Vertex v) const {
  if (v < 1 || v > vertex_count_) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange,
                     "vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

int SimpleGraph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

int SimpleGraph::min_degree() const {
  if (vertex_count_ == 0) return 0;
  int best = degree(1);
  for (Vertex v = 2; v <= vertex_count_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Vertex> SimpleGraph::isolated_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= vertex_count_; ++v) {
    if (adjacency_[v].empty()) out.push_back(v);
  }
  return out;
}

SimpleGraph make_graph(int vertex_count,
                       std::span<const std::pair<int, int>> edges,
                       DuplicatePolicy policy) {
  return SimpleGraph(vertex_count, edges, policy);
}

SimpleGraph make_graph(int vertex_count,
                       std::initializer_list<std::pair<int, int>> edges,
                       DuplicatePolicy policy) {
  std::vector<std::pair<int, int>> list(edges);
  return SimpleGraph(vertex_count, list, policy);
}

std::vector<Triangle> triangles(const SimpleGraph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    // Third vertex above both endpoints so each triangle is found once.
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(common));
    for (Vertex w : common) {
      if (w > e.v) out.push_back(Triangle{e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t connected_component_count(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = static_cast<std::size_t>(n);
  for (const Edge& e : g.edges()) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool is_connected_graph(const SimpleGraph& g) {
  return connected_component_count(g) <= 1;
}

void for_each_graph(int n, int min_degree,
                    const std::function<void(const SimpleGraph&)>& visit) {
  if (n < 1) {
    throw GraphError(GraphError::Kind::kInvalidParameter,
                     "enumeration needs at least one vertex");
  }
  if (n > kMaxEnumerationVertices) {
    throw GraphError(GraphError::Kind::kTooLarge,
                     "exhaustive enumeration is limited to " +
                         std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  std::vector<std::pair<int, int>> candidates;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) candidates.emplace_back(i, j);
  }
  const std::uint32_t subsets = 1u << candidates.size();
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    chosen.clear();
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (mask & (1u << k)) {
        chosen.push_back(candidates[k]);
        ++degree[candidates[k].first];
        ++degree[candidates[k].second];
      }
    }
    if (*std::min_element(degree.begin() + 1, degree.end()) < min_degree) {
      continue;
    }
    visit(SimpleGraph(n, chosen));
  }
}

std::vector<SimpleGraph> enumerate_graphs(int n, int min_degree) {
  std::vector<SimpleGraph> out;
  for_each_graph(n, min_degree,
                 [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace simplicial_lines
