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

#ifndef SIMPLICIAL_LINES_TOOLS_REPORT_HPP_
#define SIMPLICIAL_LINES_TOOLS_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/graph.hpp"
#include "simplicial_lines/indices.hpp"
#include "simplicial_lines/serialization.hpp"
#include "simplicial_lines/theorems.hpp"

namespace simplicial_lines::cli {

struct ComplexSummary {
  ComplexKind kind = ComplexKind::kLine;
  std::size_t generator_count = 0;
  SimplicialComplex complex;
  // Graph vertices absent from the complex.
  std::vector<Vertex> dropped_vertices;
  // Unset for the void complex.
  std::optional<FVector> f;
  std::optional<std::int64_t> euler_characteristic;
  std::optional<int> dimension;
  std::optional<bool> pure;
  std::optional<bool> connected;
  std::size_t components = 0;
};

enum class CheckStatus { kPass, kFail, kSkipped };
std::string_view to_string(CheckStatus status);

struct AnalysisReport {
  SimpleGraph graph;
  std::size_t triangle_count = 0;
  bool graph_connected = false;
  std::vector<Vertex> isolated_vertices;
  std::vector<ComplexSummary> complexes;

  CheckStatus connectivity_status = CheckStatus::kSkipped;
  std::optional<ConnectivityCheck> connectivity;
  CheckStatus euler_status = CheckStatus::kSkipped;
  std::optional<EulerDecompositionCheck> euler;
  std::string skip_reason;

  bool any_failure() const {
    return connectivity_status == CheckStatus::kFail ||
           euler_status == CheckStatus::kFail;
  }
};

// Theorem checks always run; they are SKIPPED when the graph has an
// isolated vertex. `kinds` selects which complex blocks are reported.
AnalysisReport analyze_graph(const SimpleGraph& g,
                             std::span<const ComplexKind> kinds);

Json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

}  // namespace simplicial_lines::cli

#endif  // SIMPLICIAL_LINES_TOOLS_REPORT_HPP_
