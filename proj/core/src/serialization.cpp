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

#include "simplicial_lines/serialization.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

Json graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = std::move(edges);
  return doc;
}

namespace {

bool is_int32(const Json& v) {
  if (!v.is_number_integer()) return false;
  if (v.is_number_unsigned()) {
    return v.get<std::uint64_t>() <=
           static_cast<std::uint64_t>(std::numeric_limits<int>::max());
  }
  const auto x = v.get<std::int64_t>();
  return x >= std::numeric_limits<int>::min() &&
         x <= std::numeric_limits<int>::max();
}

}  // namespace

SimpleGraph graph_from_json(const Json& doc, DuplicatePolicy policy) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("graph JSON must be an object with \"n\" and \"edges\"");
  }
  if (!is_int32(doc["n"])) {
    throw ParseError("\"n\" must be an integer");
  }
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !is_int32(e[0]) || !is_int32(e[1])) {
      throw ParseError("each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return SimpleGraph(doc["n"].get<int>(), edges, policy);
}

Json derived_graph_to_json(const EdgeVertexGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.adjacency) edges.push_back({a + 1, b + 1});
  Json labels = Json::array();
  for (const Edge& e : g.labels) labels.push_back({e.u, e.v});
  Json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = std::move(edges);
  doc["labels"] = std::move(labels);
  return doc;
}

Json faces_to_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const Face& f : faces) out.push_back(f.vertices());
  return out;
}

std::vector<Face> faces_from_json(const Json& doc) {
  if (!doc.is_array()) throw ParseError("expected an array of vertex arrays");
  std::vector<Face> out;
  for (const Json& f : doc) {
    if (!f.is_array()) throw ParseError("each face must be an array");
    std::vector<Vertex> vertices;
    for (const Json& v : f) {
      if (!is_int32(v)) throw ParseError("vertices are integers");
      vertices.push_back(v.get<Vertex>());
    }
    out.emplace_back(std::move(vertices));
  }
  return out;
}

Json index_family_to_json(const IndexFamily& family) {
  return faces_to_json(family.members);
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json doc;
  doc["vertices"] = complex.vertices();
  doc["facets"] = faces_to_json(complex.facets());
  return doc;
}

Json certificate_to_json(const ShellingCertificate& cert) {
  Json doc;
  doc["verdict"] = std::string(to_string(cert.verdict));
  doc["method"] = std::string(to_string(cert.method));
  doc["facets"] = faces_to_json(cert.facets);
  doc["ordering"] = cert.ordering;
  Json steps = Json::array();
  for (const ShellingStep& s : cert.steps) {
    Json step;
    step["facet"] = s.facet;
    step["ok"] = s.ok;
    step["evidence"] = faces_to_json(s.evidence);
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  doc["failed_step"] =
      cert.failed_step ? Json(*cert.failed_step) : Json(nullptr);
  doc["states_explored"] = cert.states_explored;
  doc["note"] = cert.note;
  return doc;
}

}  // namespace simplicial_lines
