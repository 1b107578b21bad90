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

#include "simplicial_lines/derived_graphs.hpp"

#include <algorithm>

namespace simplicial_lines {

namespace {

enum class Rule { kIncident, kNonTriangle, kTriangle };

EdgeVertexGraph build(const SimpleGraph& g, Rule rule) {
  EdgeVertexGraph out;
  out.labels = g.edges();
  const auto& labels = out.labels;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      const Edge& x = labels[a];
      const Edge& y = labels[b];
      // Distinct edges of a simple graph share at most one endpoint; the
      // other two endpoints decide whether the pair spans a triangle.
      Vertex other_x = 0;
      Vertex other_y = 0;
      if (x.u == y.u) {
        other_x = x.v, other_y = y.v;
      } else if (x.u == y.v) {
        other_x = x.v, other_y = y.u;
      } else if (x.v == y.u) {
        other_x = x.u, other_y = y.v;
      } else if (x.v == y.v) {
        other_x = x.u, other_y = y.u;
      } else {
        continue;
      }
      const bool closes = g.has_edge(other_x, other_y);
      const bool keep = rule == Rule::kIncident ||
                        (rule == Rule::kTriangle && closes) ||
                        (rule == Rule::kNonTriangle && !closes);
      if (keep) out.adjacency.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

bool EdgeVertexGraph::adjacent(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(adjacency.begin(), adjacency.end(),
                            std::make_pair(a, b));
}

std::optional<std::size_t> EdgeVertexGraph::index_of(const Edge& e) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), e);
  if (it == labels.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<std::size_t> EdgeVertexGraph::isolated_labels() const {
  std::vector<bool> touched(labels.size(), false);
  for (const auto& [a, b] : adjacency) touched[a] = touched[b] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!touched[k]) out.push_back(k);
  }
  return out;
}

EdgeVertexGraph line_graph(const SimpleGraph& g) {
  return build(g, Rule::kIncident);
}

EdgeVertexGraph gallai_graph(const SimpleGraph& g) {
  return build(g, Rule::kNonTriangle);
}

EdgeVertexGraph anti_gallai_graph(const SimpleGraph& g) {
  return build(g, Rule::kTriangle);
}

}  // namespace simplicial_lines
