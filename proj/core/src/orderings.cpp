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

#include "simplicial_lines/orderings.hpp"

#include <string>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

namespace {

void require_at_least(const char* what, int n, int minimum) {
  if (n < minimum) {
    throw GraphError(GraphError::Kind::kInvalidParameter,
                     std::string(what) + " needs n >= " +
                         std::to_string(minimum));
  }
}

std::vector<Face> hub_pairs(int leaves, Vertex hub) {
  std::vector<Face> out;
  for (Vertex i = 1; i <= leaves; ++i) {
    for (Vertex j = i + 1; j <= leaves; ++j) out.push_back(Face{i, j, hub});
  }
  return out;
}

}  // namespace

std::vector<Face> friendship_line_ordering(int n) {
  require_at_least("friendship line ordering", n, 1);
  return hub_pairs(2 * n, 2 * n + 1);
}

std::vector<Face> wheel_line_ordering(int n) {
  require_at_least("wheel line ordering", n, 4);
  std::vector<Face> out = hub_pairs(n, n + 1);
  for (Vertex i = 1; i <= n - 2; ++i) out.push_back(Face{i, i + 1, i + 2});
  out.push_back(Face{n - 1, n, 1});
  out.push_back(Face{n, 1, 2});
  return out;
}

std::vector<Face> wheel_anti_gallai_ordering(int n) {
  require_at_least("wheel anti-Gallai ordering", n, 4);
  std::vector<Face> out;
  for (Vertex i = 1; i < n; ++i) out.push_back(Face{i, i + 1, n + 1});
  out.push_back(Face{n, 1, n + 1});
  return out;
}

}  // namespace simplicial_lines
