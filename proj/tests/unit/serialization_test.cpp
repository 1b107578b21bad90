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

#include "gtest/gtest.h"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/error.hpp"
#include "simplicial_lines/families.hpp"
#include "simplicial_lines/shelling.hpp"
#include "support/oracles.hpp"

namespace simplicial_lines {
namespace {

SimpleGraph TrianglePlusPendant() {
  return make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

TEST(SerializationTest, GraphKeyOrder) {
  EXPECT_EQ(graph_to_json(TrianglePlusPendant()).dump(),
            R"({"n":4,"edges":[[1,2],[1,3],[2,3],[3,4]]})");
}

TEST(SerializationTest, GraphRoundTripOnCorpus) {
  testing::for_each_small_graph(5, 0, [](int, const SimpleGraph& g) {
    ASSERT_EQ(graph_from_json(graph_to_json(g)), g);
  });
}

TEST(SerializationTest, GraphFromJsonErrors) {
  EXPECT_THROW(graph_from_json(Json::parse("{\"n\":4000000000,\"edges\":[]}")),
               ParseError);
  EXPECT_THROW(graph_from_json(Json::parse("{\"n\":-1,\"edges\":[]}")),
               GraphError);
  EXPECT_NO_THROW(graph_from_json(
      Json::parse("{\"n\":2,\"edges\":[[1,2],[2,1]]}"), DuplicatePolicy::kDedupe));
}

TEST(SerializationTest, DerivedGraphUsesOneBasedVertices) {
  const Json doc = derived_graph_to_json(gallai_graph(TrianglePlusPendant()));
  EXPECT_EQ(doc.dump(),
            R"({"n":4,"edges":[[2,4],[3,4]],"labels":[[1,2],[1,3],[2,3],[3,4]]})");
}

TEST(SerializationTest, FacesRoundTrip) {
  const std::vector<Face> faces = {{1, 2}, {1, 3, 4}, {}};
  EXPECT_EQ(faces_to_json(faces).dump(), "[[1,2],[1,3,4],[]]");
  EXPECT_EQ(faces_from_json(faces_to_json(faces)), faces);
  EXPECT_THROW(faces_from_json(Json::parse("[1,2]")), ParseError);
  EXPECT_THROW(faces_from_json(Json::parse("{}")), ParseError);
  EXPECT_THROW(faces_from_json(Json::parse("[[1,\"a\"]]")), ParseError);
}

TEST(SerializationTest, Complex) {
  const Json doc = complex_to_json(anti_gallai_complex(TrianglePlusPendant()));
  EXPECT_EQ(doc.dump(), R"({"vertices":[1,2,3],"facets":[[1,2,3]]})");
  EXPECT_EQ(index_family_to_json(line_indices(TrianglePlusPendant())).dump(),
            "[[1,2,3],[1,3,4],[2,3,4]]");
}

TEST(SerializationTest, CertificateFields) {
  const SimplicialComplex c = line_complex(cycle_graph(5));
  const Json refuted =
      certificate_to_json(find_shelling_order(c, ShellingMethod::kDefinition));
  std::vector<std::string> keys;
  for (const auto& item : refuted.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "verdict", "method", "facets", "ordering", "steps",
                      "failed_step", "states_explored", "note"}));
  EXPECT_EQ(refuted["verdict"], "NOT_SHELLABLE");
  EXPECT_TRUE(refuted["failed_step"].is_null());

  const SimplicialComplex l = line_complex(TrianglePlusPendant());
  const Json ok = certificate_to_json(
      find_shelling_order(l, ShellingMethod::kResiduals));
  EXPECT_EQ(ok["verdict"], "SHELLABLE");
  EXPECT_EQ(ok["method"], "residuals");
  ASSERT_EQ(ok["steps"].size(), 3u);
  EXPECT_TRUE(ok["steps"][0]["evidence"].empty());
  for (const auto& step : ok["steps"]) EXPECT_TRUE(step["ok"].get<bool>());
}

TEST(SerializationTest, DeterministicDumps) {
  const SimplicialComplex c = line_complex(wheel_graph(5));
  const auto a = certificate_to_json(
                     find_shelling_order(c, ShellingMethod::kDefinition))
                     .dump();
  const auto b = certificate_to_json(
                     find_shelling_order(c, ShellingMethod::kDefinition))
                     .dump();
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace simplicial_lines
