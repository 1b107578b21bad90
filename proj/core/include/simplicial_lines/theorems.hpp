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

#ifndef SIMPLICIAL_LINES_THEOREMS_HPP_
#define SIMPLICIAL_LINES_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>

#include "simplicial_lines/graph.hpp"

namespace simplicial_lines {

// Both checks require every vertex to have degree >= 1 and throw
// PreconditionError otherwise. An isolated vertex lies in no index, so the
// complexes would silently drop it.

// G is connected iff its line complex is connected.
struct ConnectivityCheck {
  bool graph_connected = false;
  bool complex_connected = false;
  std::size_t graph_components = 0;
  std::size_t complex_components = 0;

  bool holds() const noexcept { return graph_connected == complex_connected; }
};

// chi(line complex) = chi(Gallai complex) + |anti-Gallai indices|.
struct EulerDecompositionCheck {
  std::int64_t line_chi = 0;
  std::int64_t gallai_chi = 0;
  std::size_t anti_gallai_count = 0;

  bool holds() const noexcept {
    return line_chi ==
           gallai_chi + static_cast<std::int64_t>(anti_gallai_count);
  }
};

ConnectivityCheck check_connectivity_correspondence(const SimpleGraph& g);
EulerDecompositionCheck check_euler_decomposition(const SimpleGraph& g);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_THEOREMS_HPP_
