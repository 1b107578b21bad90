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

#include "simplicial_lines/graph_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicial_lines/error.hpp"
#include "simplicial_lines/serialization.hpp"

namespace simplicial_lines {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly `count` integers from a line, rejecting trailing garbage.
std::vector<long long> read_ints(const std::string& line, int count,
                                 std::size_t line_no) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long v = 0;
  while (in >> v) values.push_back(v);
  in.clear();
  std::string rest;
  if ((in >> rest) || static_cast<int>(values.size()) != count) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(count) + " integers");
  }
  return values;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text, DuplicatePolicy policy) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto values = read_ints(line, 2, line_no);
    if (!have_header) {
      n = values[0];
      m = values[1];
      if (n < 0 || m < 0 || n > 1'000'000) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": invalid header");
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": more edge lines than the header declares");
    }
    for (long long v : values) {
      if (v < std::numeric_limits<int>::min() ||
          v > std::numeric_limits<int>::max()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": vertex label out of range");
      }
    }
    edges.emplace_back(static_cast<int>(values[0]),
                       static_cast<int>(values[1]));
  }
  if (!have_header) throw ParseError("missing 'n m' header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but " + std::to_string(edges.size()) +
                     " were given");
  }
  return SimpleGraph(static_cast<int>(n), edges, policy);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

SimpleGraph parse_graph_json(std::string_view text, DuplicatePolicy policy) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc, policy);
}

std::string format_graph_json(const SimpleGraph& g) {
  return graph_to_json(g).dump() + "\n";
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::kJson
                                     : GraphFormat::kEdgeList;
}

SimpleGraph read_graph_file(const std::filesystem::path& path,
                            DuplicatePolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (format_for_path(path) == GraphFormat::kJson) {
    return parse_graph_json(buffer.str(), policy);
  }
  return parse_edge_list(buffer.str(), policy);
}

void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (format_for_path(path) == GraphFormat::kJson ? format_graph_json(g)
                                                      : format_edge_list(g));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace simplicial_lines
