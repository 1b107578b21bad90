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

#ifndef SIMPLICIAL_LINES_GRAPH_IO_HPP_
#define SIMPLICIAL_LINES_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "simplicial_lines/graph.hpp"

namespace simplicial_lines {

// Edge-list text: a header line "n m" followed by m lines "i j".
// Lines whose first non-blank character is '#' and blank lines are skipped.
SimpleGraph parse_edge_list(std::string_view text,
                            DuplicatePolicy policy = DuplicatePolicy::kReject);
std::string format_edge_list(const SimpleGraph& g);

// JSON text: {"n":5,"edges":[[1,2],...]}.
SimpleGraph parse_graph_json(std::string_view text,
                             DuplicatePolicy policy = DuplicatePolicy::kReject);
std::string format_graph_json(const SimpleGraph& g);

enum class GraphFormat { kEdgeList, kJson };

// ".json" selects JSON; any other extension is read as an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

// Throws ParseError for malformed content, std::runtime_error for IO.
SimpleGraph read_graph_file(const std::filesystem::path& path,
                            DuplicatePolicy policy = DuplicatePolicy::kReject);
void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_GRAPH_IO_HPP_
