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

#include "simplicial_lines/indices.hpp"

#include <algorithm>

namespace simplicial_lines {

namespace {

Face endpoints(const Edge& e) { return Face{e.u, e.v}; }

IndexFamily collect(const EdgeVertexGraph& derived, ComplexKind kind,
                    bool isolated_pairs) {
  IndexFamily family;
  family.kind = kind;
  for (const auto& [a, b] : derived.adjacency) {
    family.members.push_back(
        set_union(endpoints(derived.labels[a]), endpoints(derived.labels[b])));
  }
  if (isolated_pairs) {
    for (std::size_t k : derived.isolated_labels()) {
      family.members.push_back(endpoints(derived.labels[k]));
    }
  }
  std::sort(family.members.begin(), family.members.end());
  family.members.erase(
      std::unique(family.members.begin(), family.members.end()),
      family.members.end());
  return family;
}

}  // namespace

std::string_view to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::kLine:
      return "line";
    case ComplexKind::kGallai:
      return "gallai";
    case ComplexKind::kAntiGallai:
      return "anti-gallai";
  }
  return "unknown";
}

std::optional<ComplexKind> parse_complex_kind(std::string_view name) {
  if (name == "line") return ComplexKind::kLine;
  if (name == "gallai") return ComplexKind::kGallai;
  if (name == "anti-gallai") return ComplexKind::kAntiGallai;
  return std::nullopt;
}

bool IndexFamily::contains(const Face& f) const {
  return std::binary_search(members.begin(), members.end(), f);
}

IndexFamily line_indices(const SimpleGraph& g) {
  return collect(line_graph(g), ComplexKind::kLine, true);
}

IndexFamily gallai_indices(const SimpleGraph& g) {
  return collect(gallai_graph(g), ComplexKind::kGallai, true);
}

IndexFamily anti_gallai_indices(const SimpleGraph& g) {
  return collect(anti_gallai_graph(g), ComplexKind::kAntiGallai, false);
}

IndexFamily indices_of(const SimpleGraph& g, ComplexKind kind) {
  switch (kind) {
    case ComplexKind::kLine:
      return line_indices(g);
    case ComplexKind::kGallai:
      return gallai_indices(g);
    case ComplexKind::kAntiGallai:
      return anti_gallai_indices(g);
  }
  return {};
}

std::string index_notation(const Face& f) {
  std::string out = "F_{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f[i]);
  }
  return out + "}";
}

}  // namespace simplicial_lines
