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

#include "report.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace simplicial_lines::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_vertices(const std::vector<Vertex>& vs) {
  if (vs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

ComplexSummary summarize(const SimpleGraph& g, ComplexKind kind) {
  ComplexSummary s;
  s.kind = kind;
  IndexFamily family = indices_of(g, kind);
  s.generator_count = family.size();
  s.complex = complex_from_generators(family.members);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!std::binary_search(s.complex.vertices().begin(),
                            s.complex.vertices().end(), v)) {
      s.dropped_vertices.push_back(v);
    }
  }
  if (!s.complex.is_void()) {
    s.f = f_vector(s.complex);
    s.euler_characteristic = euler_characteristic(*s.f);
    s.dimension = dimension(s.complex);
    s.pure = is_pure(s.complex);
    s.components = connected_components(s.complex).size();
    s.connected = s.components == 1;
  }
  return s;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

AnalysisReport analyze_graph(const SimpleGraph& g,
                             std::span<const ComplexKind> kinds) {
  AnalysisReport report;
  report.graph = g;
  report.triangle_count = triangles(g).size();
  report.graph_connected = is_connected_graph(g);
  report.isolated_vertices = g.isolated_vertices();
  for (ComplexKind kind : kinds) report.complexes.push_back(summarize(g, kind));

  if (g.vertex_count() == 0 || !report.isolated_vertices.empty()) {
    report.skip_reason =
        g.vertex_count() == 0
            ? "graph has no vertices"
            : "graph has isolated vertices, which no index covers";
    return report;
  }
  report.connectivity = check_connectivity_correspondence(g);
  report.connectivity_status = report.connectivity->holds()
                                   ? CheckStatus::kPass
                                   : CheckStatus::kFail;
  report.euler = check_euler_decomposition(g);
  report.euler_status =
      report.euler->holds() ? CheckStatus::kPass : CheckStatus::kFail;
  return report;
}

Json report_to_json(const AnalysisReport& report) {
  Json doc;
  Json graph;
  graph["n"] = report.graph.vertex_count();
  graph["m"] = report.graph.edge_count();
  graph["triangles"] = report.triangle_count;
  graph["connected"] = report.graph_connected;
  graph["isolated_vertices"] = report.isolated_vertices;
  doc["graph"] = std::move(graph);

  Json complexes = Json::array();
  for (const ComplexSummary& s : report.complexes) {
    Json c;
    c["kind"] = std::string(to_string(s.kind));
    c["generators"] = s.generator_count;
    c["void"] = s.complex.is_void();
    c["vertices"] = s.complex.vertices();
    c["facets"] = faces_to_json(s.complex.facets());
    c["dropped_vertices"] = s.dropped_vertices;
    c["f_vector"] = s.f ? Json(s.f->counts) : Json(nullptr);
    c["euler_characteristic"] =
        s.euler_characteristic ? Json(*s.euler_characteristic) : Json(nullptr);
    c["dimension"] = s.dimension ? Json(*s.dimension) : Json(nullptr);
    c["pure"] = s.pure ? Json(*s.pure) : Json(nullptr);
    c["connected"] = s.connected ? Json(*s.connected) : Json(nullptr);
    c["components"] = s.components;
    complexes.push_back(std::move(c));
  }
  doc["complexes"] = std::move(complexes);

  Json theorems;
  Json conn;
  conn["status"] = std::string(to_string(report.connectivity_status));
  if (report.connectivity) {
    conn["graph_connected"] = report.connectivity->graph_connected;
    conn["complex_connected"] = report.connectivity->complex_connected;
    conn["graph_components"] = report.connectivity->graph_components;
    conn["complex_components"] = report.connectivity->complex_components;
  } else {
    conn["reason"] = report.skip_reason;
  }
  theorems["connectivity"] = std::move(conn);
  Json euler;
  euler["status"] = std::string(to_string(report.euler_status));
  if (report.euler) {
    euler["line_euler_characteristic"] = report.euler->line_chi;
    euler["gallai_euler_characteristic"] = report.euler->gallai_chi;
    euler["anti_gallai_indices"] = report.euler->anti_gallai_count;
  } else {
    euler["reason"] = report.skip_reason;
  }
  theorems["euler_decomposition"] = std::move(euler);
  doc["theorems"] = std::move(theorems);
  return doc;
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "graph: n=" << report.graph.vertex_count()
      << " m=" << report.graph.edge_count()
      << " triangles=" << report.triangle_count
      << " connected=" << yes_no(report.graph_connected) << '\n';
  out << "isolated vertices: " << join_vertices(report.isolated_vertices)
      << '\n';
  for (const ComplexSummary& s : report.complexes) {
    out << '[' << to_string(s.kind) << "] generators=" << s.generator_count
        << '\n';
    if (s.complex.is_void()) {
      out << "  void complex (no facets)\n";
      continue;
    }
    out << "  facets:";
    for (const Face& f : s.complex.facets()) out << ' ' << index_notation(f);
    out << '\n';
    out << "  f-vector: (";
    for (std::size_t k = 0; k < s.f->counts.size(); ++k) {
      if (k > 0) out << ", ";
      out << s.f->counts[k];
    }
    out << ")\n";
    out << "  euler characteristic: " << *s.euler_characteristic << '\n';
    out << "  dimension: " << *s.dimension << "  pure: " << yes_no(*s.pure)
        << "  connected: " << yes_no(*s.connected)
        << "  components: " << s.components << '\n';
    out << "  dropped vertices: " << join_vertices(s.dropped_vertices) << '\n';
  }
  out << "connectivity: " << to_string(report.connectivity_status);
  if (report.connectivity) {
    out << " (graph connected=" << yes_no(report.connectivity->graph_connected)
        << ", line complex connected="
        << yes_no(report.connectivity->complex_connected) << ")";
  } else {
    out << " (" << report.skip_reason << ")";
  }
  out << '\n';
  out << "euler decomposition: " << to_string(report.euler_status);
  if (report.euler) {
    out << " (line=" << report.euler->line_chi
        << ", gallai=" << report.euler->gallai_chi
        << ", anti-gallai indices=" << report.euler->anti_gallai_count << ")";
  } else {
    out << " (" << report.skip_reason << ")";
  }
  out << '\n';
  return out.str();
}

}  // namespace simplicial_lines::cli
