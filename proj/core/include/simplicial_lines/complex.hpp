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

#ifndef SIMPLICIAL_LINES_COMPLEX_HPP_
#define SIMPLICIAL_LINES_COMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simplicial_lines/face.hpp"
#include "simplicial_lines/graph.hpp"
#include "simplicial_lines/indices.hpp"

namespace simplicial_lines {

// A simplicial complex stored by its facets. The vertex set is the union of
// the facet supports; a complex without facets is the void complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Keeps the inclusion-maximal members of `generators`. Throws
  // ComplexError if any generator is the empty set.
  static SimplicialComplex from_generators(std::span<const Face> generators);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  // Sorted lexicographically.
  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  bool is_void() const noexcept { return facets_.empty(); }

  // True when `face` lies inside some facet. The empty face belongs to
  // every non-void complex.
  bool contains_face(const Face& face) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

SimplicialComplex complex_from_generators(std::span<const Face> generators);

SimplicialComplex line_complex(const SimpleGraph& g);
SimplicialComplex gallai_complex(const SimpleGraph& g);
SimplicialComplex anti_gallai_complex(const SimpleGraph& g);
SimplicialComplex complex_of(const SimpleGraph& g, ComplexKind kind);

// counts[k] is the number of k-dimensional faces ((k+1)-vertex subsets of
// some facet). The empty face is not counted.
struct FVector {
  std::vector<std::int64_t> counts;

  friend bool operator==(const FVector&, const FVector&) = default;
};

// The functions below throw ComplexError on the void complex.
FVector f_vector(const SimplicialComplex& complex);
std::int64_t euler_characteristic(const SimplicialComplex& complex);
std::int64_t euler_characteristic(const FVector& f);
int dimension(const SimplicialComplex& complex);
bool is_pure(const SimplicialComplex& complex);

// Connectivity of the facet graph, where facets are joined when they share
// a vertex.
bool is_connected_complex(const SimplicialComplex& complex);
// Components ordered by their smallest vertex.
std::vector<SimplicialComplex> connected_components(
    const SimplicialComplex& complex);

// Face-containment semantics: every facet of `sub` is a face of `whole`.
// A complex whose facets are not facets of `whole` can still qualify.
bool is_subcomplex(const SimplicialComplex& sub,
                   const SimplicialComplex& whole);
// Subcomplex on the same vertex set.
bool is_spanning_subcomplex(const SimplicialComplex& sub,
                            const SimplicialComplex& whole);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_COMPLEX_HPP_
