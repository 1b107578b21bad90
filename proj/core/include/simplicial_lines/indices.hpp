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

#ifndef SIMPLICIAL_LINES_INDICES_HPP_
#define SIMPLICIAL_LINES_INDICES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplicial_lines/derived_graphs.hpp"
#include "simplicial_lines/face.hpp"
#include "simplicial_lines/graph.hpp"

namespace simplicial_lines {

enum class ComplexKind { kLine, kGallai, kAntiGallai };

// "line", "gallai", "anti-gallai".
std::string_view to_string(ComplexKind kind);
std::optional<ComplexKind> parse_complex_kind(std::string_view name);

// Generator family of one of the three complexes attached to a graph.
// Members are 2- or 3-element vertex sets, sorted and duplicate-free.
struct IndexFamily {
  ComplexKind kind = ComplexKind::kLine;
  std::vector<Face> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Face& f) const;

  friend bool operator==(const IndexFamily&, const IndexFamily&) = default;
};

// {i,j,k} for every pair of incident edges, plus {i,j} for each edge with
// no incident edge at all.
IndexFamily line_indices(const SimpleGraph& g);

// {i,j,k} for incident pairs not spanning a triangle, plus {i,j} for each
// edge isolated in the Gallai graph.
IndexFamily gallai_indices(const SimpleGraph& g);

// {i,j,k} for incident pairs spanning a triangle. Never contains 2-sets, so
// a triangle-free graph has an empty family.
IndexFamily anti_gallai_indices(const SimpleGraph& g);

IndexFamily indices_of(const SimpleGraph& g, ComplexKind kind);

// "F_{1,2,3}" style rendering of a single index.
std::string index_notation(const Face& f);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_INDICES_HPP_
