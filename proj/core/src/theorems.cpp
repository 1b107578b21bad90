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

#include "simplicial_lines/theorems.hpp"

#include <string>

#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/error.hpp"
#include "simplicial_lines/indices.hpp"

namespace simplicial_lines {

namespace {

void require_no_isolated_vertices(const SimpleGraph& g) {
  if (g.vertex_count() == 0 || g.min_degree() < 1) {
    throw PreconditionError(
        "theorem checks need a non-empty graph with minimum degree >= 1 "
        "(found " +
        std::to_string(g.isolated_vertices().size()) + " isolated vertices)");
  }
}

}  // namespace

ConnectivityCheck check_connectivity_correspondence(const SimpleGraph& g) {
  require_no_isolated_vertices(g);
  ConnectivityCheck check;
  check.graph_components = connected_component_count(g);
  check.graph_connected = check.graph_components == 1;
  const auto components = connected_components(line_complex(g));
  check.complex_components = components.size();
  check.complex_connected = components.size() == 1;
  return check;
}

EulerDecompositionCheck check_euler_decomposition(const SimpleGraph& g) {
  require_no_isolated_vertices(g);
  EulerDecompositionCheck check;
  check.line_chi = euler_characteristic(line_complex(g));
  check.gallai_chi = euler_characteristic(gallai_complex(g));
  check.anti_gallai_count = anti_gallai_indices(g).size();
  return check;
}

}  // namespace simplicial_lines
