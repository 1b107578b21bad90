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

#include "simplicial_lines/families.hpp"

#include <string>
#include <utility>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

namespace {

void require_at_least(std::string_view family, int param, int minimum) {
  if (param < minimum) {
    throw GraphError(GraphError::Kind::kInvalidParameter,
                     std::string(family) + " parameter must be >= " +
                         std::to_string(minimum) + ", got " +
                         std::to_string(param));
  }
}

using EdgeList = std::vector<std::pair<int, int>>;

}  // namespace

SimpleGraph wheel_graph(int n) {
  require_at_least("wheel", n, 3);
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + 1);
  return SimpleGraph(n + 1, edges);
}

SimpleGraph friendship_graph(int n) {
  require_at_least("friendship", n, 1);
  const int hub = 2 * n + 1;
  EdgeList edges;
  for (int k = 1; k <= n; ++k) edges.emplace_back(2 * k - 1, 2 * k);
  for (int i = 1; i <= 2 * n; ++i) edges.emplace_back(i, hub);
  return SimpleGraph(hub, edges);
}

SimpleGraph prism_graph(int n) {
  require_at_least("prism", n, 1);
  EdgeList edges;
  for (int k = 0; k < n; ++k) {
    const int base = 3 * k;
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base + 2, base + 3);
    edges.emplace_back(base + 1, base + 3);
    if (k + 1 < n) {
      for (int i = 1; i <= 3; ++i) edges.emplace_back(base + i, base + 3 + i);
    }
  }
  return SimpleGraph(3 * n, edges);
}

SimpleGraph cycle_graph(int n) {
  require_at_least("cycle", n, 3);
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph star_graph(int k) {
  require_at_least("star", k, 1);
  EdgeList edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(i, k + 1);
  return SimpleGraph(k + 1, edges);
}

SimpleGraph path_graph(int n) {
  require_at_least("path", n, 1);
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph complete_graph(int n) {
  require_at_least("complete", n, 1);
  EdgeList edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(n, edges);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "wheel", "friendship", "prism", "cycle", "star", "path", "complete"};
  return names;
}

SimpleGraph family_graph(std::string_view family, int param) {
  if (family == "wheel") return wheel_graph(param);
  if (family == "friendship") return friendship_graph(param);
  if (family == "prism") return prism_graph(param);
  if (family == "cycle") return cycle_graph(param);
  if (family == "star") return star_graph(param);
  if (family == "path") return path_graph(param);
  if (family == "complete") return complete_graph(param);
  throw GraphError(GraphError::Kind::kInvalidParameter,
                   "unknown graph family '" + std::string(family) + "'");
}

}  // namespace simplicial_lines
