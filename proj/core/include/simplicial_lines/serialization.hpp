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

#ifndef SIMPLICIAL_LINES_SERIALIZATION_HPP_
#define SIMPLICIAL_LINES_SERIALIZATION_HPP_

#include <vector>

#include <nlohmann/json.hpp>

#include "simplicial_lines/certificate.hpp"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/derived_graphs.hpp"
#include "simplicial_lines/graph.hpp"
#include "simplicial_lines/indices.hpp"

namespace simplicial_lines {

// Key order is part of the output format, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

// {"n":5,"edges":[[1,2],...]}
Json graph_to_json(const SimpleGraph& g);
// Throws ParseError on schema violations, GraphError on invalid graphs.
SimpleGraph graph_from_json(const Json& doc,
                            DuplicatePolicy policy = DuplicatePolicy::kReject);

// Graph schema with 1-based derived vertices plus "labels": the base-graph
// edge each derived vertex stands for.
Json derived_graph_to_json(const EdgeVertexGraph& g);

// [[1,2],[1,3,4],...]
Json faces_to_json(const std::vector<Face>& faces);
std::vector<Face> faces_from_json(const Json& doc);
Json index_family_to_json(const IndexFamily& family);

// {"vertices":[...],"facets":[[...],...]}
Json complex_to_json(const SimplicialComplex& complex);

Json certificate_to_json(const ShellingCertificate& cert);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_SERIALIZATION_HPP_
