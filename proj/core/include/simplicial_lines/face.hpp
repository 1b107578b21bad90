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

#ifndef SIMPLICIAL_LINES_FACE_HPP_
#define SIMPLICIAL_LINES_FACE_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace simplicial_lines {

// Vertices of graphs and complexes are 1-based labels.
using Vertex = int;

// A finite vertex set, kept sorted and duplicate-free. Used for graph
// indices, faces and facets of complexes, and monomial supports.
class Face {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::vector<Vertex> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const_iterator begin() const noexcept { return vertices_.begin(); }
  const_iterator end() const noexcept { return vertices_.end(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;

  // "{1,2,3}"
  std::string to_string() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

Face intersection(const Face& a, const Face& b);
Face difference(const Face& a, const Face& b);
Face set_union(const Face& a, const Face& b);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_FACE_HPP_
