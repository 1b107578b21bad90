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

#ifndef SIMPLICIAL_LINES_FAMILIES_HPP_
#define SIMPLICIAL_LINES_FAMILIES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "simplicial_lines/graph.hpp"

namespace simplicial_lines {

// Named graph families. Labelling is fixed so that index families come out
// in a predictable form: hubs always take the largest label.

// Rim 1..n in cyclic order, hub n+1. Requires n >= 3.
SimpleGraph wheel_graph(int n);

// Triangles {2k-1, 2k, 2n+1} for k = 1..n sharing hub 2n+1. Requires n >= 1.
SimpleGraph friendship_graph(int n);

// n stacked triangles {3k+1, 3k+2, 3k+3} joined by vertical edges
// (3k+i, 3k+3+i). Requires n >= 1.
SimpleGraph prism_graph(int n);

SimpleGraph cycle_graph(int n);     // n >= 3
SimpleGraph star_graph(int k);      // leaves 1..k, hub k+1; k >= 1
SimpleGraph path_graph(int n);      // n >= 1
SimpleGraph complete_graph(int n);  // n >= 1

// Dispatch by family name ("wheel", "friendship", "prism", "cycle", "star",
// "path", "complete"). Throws GraphError(kInvalidParameter) for unknown
// names or out-of-range parameters.
SimpleGraph family_graph(std::string_view family, int param);
const std::vector<std::string>& family_names();

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_FAMILIES_HPP_
