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

#ifndef SIMPLICIAL_LINES_DERIVED_GRAPHS_HPP_
#define SIMPLICIAL_LINES_DERIVED_GRAPHS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "simplicial_lines/graph.hpp"

namespace simplicial_lines {

// A graph whose vertices are the edges of some base graph. Vertex k of the
// derived graph is labels[k]; labels follow the base graph's sorted edge
// order, so numbering is reproducible.
struct EdgeVertexGraph {
  std::vector<Edge> labels;
  // Pairs (a, b) of label indices with a < b, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;

  std::size_t vertex_count() const noexcept { return labels.size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const Edge& e) const;
  // Label indices with no incident adjacency.
  std::vector<std::size_t> isolated_labels() const;

  friend bool operator==(const EdgeVertexGraph&,
                         const EdgeVertexGraph&) = default;
};

// Edges adjacent iff they share an endpoint.
EdgeVertexGraph line_graph(const SimpleGraph& g);

// e_{i,j}, e_{j,k} adjacent iff they share j and {i,k} is not an edge.
EdgeVertexGraph gallai_graph(const SimpleGraph& g);

// e_{i,j}, e_{j,k} adjacent iff they share j and {i,k} is an edge, i.e. the
// pair spans a triangle.
EdgeVertexGraph anti_gallai_graph(const SimpleGraph& g);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_DERIVED_GRAPHS_HPP_
