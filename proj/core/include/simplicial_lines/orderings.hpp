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

#ifndef SIMPLICIAL_LINES_ORDERINGS_HPP_
#define SIMPLICIAL_LINES_ORDERINGS_HPP_

#include <vector>

#include "simplicial_lines/face.hpp"

namespace simplicial_lines {

// Explicit shelling orders for the named families, as facet lists. Convert
// with ordering_from_facets() before passing to verify_ordering().

// Line complex of friendship_graph(n): {i, j, hub} for 1 <= i < j <= 2n in
// lexicographic order of (i, j). Requires n >= 1.
std::vector<Face> friendship_line_ordering(int n);

// Line complex of wheel_graph(n), n >= 4: first every hub triple
// {i, j, n+1} with i < j in lexicographic order, then the rim triples
// {1,2,3}, {2,3,4}, ..., {n-2,n-1,n}, {n-1,n,1}, {n,1,2}.
std::vector<Face> wheel_line_ordering(int n);

// Anti-Gallai complex of wheel_graph(n), n >= 4: {i, i+1, n+1} going round
// the rim, closing with {n, 1, n+1}.
std::vector<Face> wheel_anti_gallai_ordering(int n);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_ORDERINGS_HPP_
