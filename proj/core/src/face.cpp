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

#include "simplicial_lines/face.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace simplicial_lines {

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

std::string Face::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vertices_[i]);
  }
  out += '}';
  return out;
}

Face intersection(const Face& a, const Face& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return Face(std::move(out));
}

Face difference(const Face& a, const Face& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return Face(std::move(out));
}

Face set_union(const Face& a, const Face& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return Face(std::move(out));
}

}  // namespace simplicial_lines
