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

#include <set>

#include "gtest/gtest.h"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/families.hpp"
#include "support/oracles.hpp"

namespace simplicial_lines {
namespace {

SimpleGraph TrianglePlusPendant() {
  return make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

// Index family of a derived graph straight from the definition: the union
// of the two base edges for every adjacency, plus the base edge itself for
// every isolated derived vertex.
std::vector<Face> IndicesByDefinition(const EdgeVertexGraph& d,
                                      bool with_isolated) {
  std::set<Face> out;
  for (const auto& [a, b] : d.adjacency) {
    out.insert(Face({d.labels[a].u, d.labels[a].v, d.labels[b].u,
                     d.labels[b].v}));
  }
  if (with_isolated) {
    for (std::size_t i : d.isolated_labels())
      out.insert(Face({d.labels[i].u, d.labels[i].v}));
  }
  return {out.begin(), out.end()};
}

TEST(IndicesTest, WorkedExample) {
  const SimpleGraph g = TrianglePlusPendant();
  const std::vector<Face> line = {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}};
  const std::vector<Face> gallai = {{1, 2}, {1, 3, 4}, {2, 3, 4}};
  const std::vector<Face> anti = {{1, 2, 3}};
  EXPECT_EQ(line_indices(g).members, line);
  EXPECT_EQ(gallai_indices(g).members, gallai);
  EXPECT_EQ(anti_gallai_indices(g).members, anti);
  EXPECT_EQ(line_indices(g).kind, ComplexKind::kLine);
  EXPECT_EQ(indices_of(g, ComplexKind::kGallai), gallai_indices(g));
  EXPECT_TRUE(gallai_indices(g).contains(Face{1, 2}));
  EXPECT_FALSE(gallai_indices(g).contains(Face{1, 2, 3}));
}

TEST(IndicesTest, IsolatedEdgesGiveTwoSets) {
  const SimpleGraph m = make_graph(4, {{1, 2}, {3, 4}});
  const std::vector<Face> pairs = {{1, 2}, {3, 4}};
  EXPECT_EQ(line_indices(m).members, pairs);
  EXPECT_EQ(gallai_indices(m).members, pairs);
  // The anti-Gallai family never contains 2-sets.
  EXPECT_TRUE(anti_gallai_indices(m).members.empty());
  EXPECT_TRUE(line_indices(make_graph(3, {})).members.empty());
}

TEST(IndicesTest, CompleteGraphGallaiIsAllEdges) {
  const IndexFamily f = gallai_indices(complete_graph(4));
  EXPECT_EQ(f.size(), 6u);
  for (const Face& m : f.members) EXPECT_EQ(m.size(), 2u);
}

TEST(IndicesTest, AntiGallaiEqualsTrianglesOnCorpus) {
  testing::for_each_small_graph(6, 0, [](int, const SimpleGraph& g) {
    std::vector<Face> tris;
    for (const Triangle& t : testing::brute_force_triangles(g))
      tris.push_back(Face{t[0], t[1], t[2]});
    ASSERT_EQ(anti_gallai_indices(g).members, tris);
  });
}

TEST(IndicesTest, MatchDefinitionsOnCorpus) {
  testing::for_each_small_graph(5, 0, [](int, const SimpleGraph& g) {
    ASSERT_EQ(line_indices(g).members,
              IndicesByDefinition(line_graph(g), true));
    ASSERT_EQ(gallai_indices(g).members,
              IndicesByDefinition(gallai_graph(g), true));
    ASSERT_EQ(anti_gallai_indices(g).members,
              IndicesByDefinition(anti_gallai_graph(g), false));
  });
}

// The Gallai and anti-Gallai complexes are subcomplexes of the line complex
// under face containment.
TEST(IndicesTest, ContainmentAtComplexLevel) {
  testing::for_each_small_graph(5, 1, [](int, const SimpleGraph& g) {
    const SimplicialComplex l = line_complex(g);
    ASSERT_TRUE(is_subcomplex(gallai_complex(g), l));
    const SimplicialComplex anti = anti_gallai_complex(g);
    if (!anti.is_void()) ASSERT_TRUE(is_subcomplex(anti, l));
    // Gallai keeps every vertex of G, so it spans the line complex.
    ASSERT_TRUE(is_spanning_subcomplex(gallai_complex(g), l));
  });
}

TEST(IndicesTest, KindNames) {
  EXPECT_EQ(to_string(ComplexKind::kLine), "line");
  EXPECT_EQ(to_string(ComplexKind::kGallai), "gallai");
  EXPECT_EQ(to_string(ComplexKind::kAntiGallai), "anti-gallai");
  for (ComplexKind k :
       {ComplexKind::kLine, ComplexKind::kGallai, ComplexKind::kAntiGallai})
    EXPECT_EQ(parse_complex_kind(to_string(k)), k);
  EXPECT_FALSE(parse_complex_kind("lines").has_value());
}

TEST(IndicesTest, Notation) {
  EXPECT_EQ(index_notation(Face{1, 2, 3}), "F_{1,2,3}");
  EXPECT_EQ(index_notation(Face{4, 7}), "F_{4,7}");
}

}  // namespace
}  // namespace simplicial_lines
