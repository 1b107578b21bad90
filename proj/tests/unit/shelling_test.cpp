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

#include "simplicial_lines/shelling.hpp"

#include <map>

#include "gtest/gtest.h"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/error.hpp"
#include "simplicial_lines/families.hpp"
#include "simplicial_lines/monomial.hpp"
#include "simplicial_lines/orderings.hpp"
#include "support/oracles.hpp"

namespace simplicial_lines {
namespace {

constexpr ShellingMethod kMethods[] = {ShellingMethod::kDefinition,
                                       ShellingMethod::kResiduals};

SimplicialComplex Make(std::vector<Face> generators) {
  return complex_from_generators(generators);
}

// Re-checks a SHELLABLE certificate with the face-set oracle.
void ExpectValidOrdering(const ShellingCertificate& cert) {
  ASSERT_EQ(cert.verdict, Verdict::kShellable);
  ASSERT_EQ(cert.ordering.size(), cert.facets.size());
  std::vector<Face> prefix;
  for (std::size_t pos = 0; pos < cert.ordering.size(); ++pos) {
    const Face& f = cert.facets[cert.ordering[pos]];
    if (pos > 0) ASSERT_TRUE(testing::step_by_face_sets(prefix, f)) << pos;
    prefix.push_back(f);
  }
}

TEST(ShellingStepTest, Examples) {
  const std::vector<Face> prefix = {{1, 2, 3}};
  const StepCheck ok = shelling_step_ok(prefix, Face{1, 3, 4});
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.maximal_intersections, (std::vector<Face>{Face{1, 3}}));
  EXPECT_FALSE(shelling_step_ok(prefix, Face{3, 4, 5}).ok);
  // An edge meeting a triangle in one vertex is a valid non-pure step.
  EXPECT_TRUE(shelling_step_ok(prefix, Face{3, 4}).ok);
  // A disjoint vertex is fine: the intersection is {∅}, of dimension -1.
  EXPECT_TRUE(shelling_step_ok(prefix, Face{9}).ok);
  EXPECT_FALSE(shelling_step_ok(prefix, Face{8, 9}).ok);
  EXPECT_THROW(shelling_step_ok({}, Face{1}), ShellingError);
}

TEST(ShellingSearchTest, SingleFacet) {
  for (ShellingMethod m : kMethods) {
    const auto cert = find_shelling_order(Make({{1, 2, 3}}), m);
    EXPECT_EQ(cert.verdict, Verdict::kShellable);
    EXPECT_EQ(cert.ordering, std::vector<std::size_t>{0});
  }
}

TEST(ShellingSearchTest, CycleFiveLineIsNotShellable) {
  const SimplicialComplex c = line_complex(cycle_graph(5));
  const std::vector<Face> facets = {
      {1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}};
  EXPECT_EQ(c.facets(), facets);
  for (ShellingMethod m : kMethods) {
    const auto cert = find_shelling_order(c, m);
    EXPECT_EQ(cert.verdict, Verdict::kNotShellable);
    EXPECT_GT(cert.states_explored, 0u);
    EXPECT_TRUE(cert.ordering.empty());
  }
  EXPECT_FALSE(testing::shellable_by_permutations(c));
}

TEST(ShellingSearchTest, DisjointFacetsNeverShellable) {
  const std::vector<std::vector<Face>> cases = {
      {{1, 2}, {3, 4}},
      {{1, 2, 3}, {4, 5, 6}},
      {{1, 2, 3}, {4, 5}},
      {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
  };
  for (const auto& gens : cases) {
    for (ShellingMethod m : kMethods) {
      EXPECT_EQ(find_shelling_order(Make(gens), m).verdict,
                Verdict::kNotShellable);
    }
  }
  // Isolated vertices alone are shellable: each step meets in {∅}.
  EXPECT_EQ(find_shelling_order(Make({{1}, {2}, {3}}),
                                ShellingMethod::kDefinition)
                .verdict,
            Verdict::kShellable);
}

TEST(ShellingSearchTest, RespectsBound) {
  const SimplicialComplex c = line_complex(wheel_graph(10));
  ASSERT_EQ(c.facet_count(), 55u);
  try {
    find_shelling_order(c, ShellingMethod::kDefinition);
    FAIL();
  } catch (const ShellingError& e) {
    EXPECT_EQ(e.kind(), ShellingError::Kind::kBoundExceeded);
  }
  // Above the hard limit the bound cannot be raised.
  const SimplicialComplex big = line_complex(friendship_graph(6));
  ASSERT_GT(big.facet_count(), kHardMaxFacets);
  EXPECT_THROW(find_shelling_order(big, ShellingMethod::kDefinition,
                                   SearchOptions{1000}),
               ShellingError);
  EXPECT_THROW(find_shelling_order(SimplicialComplex(),
                                   ShellingMethod::kDefinition),
               ComplexError);
}

TEST(ShellingSearchTest, RaisedBoundFindsFriendshipOrders) {
  for (int n = 2; n <= 5; ++n) {
    const SimplicialComplex c = line_complex(friendship_graph(n));
    for (ShellingMethod m : kMethods) {
      const auto cert = find_shelling_order(c, m, SearchOptions{64});
      ExpectValidOrdering(cert);
    }
  }
}

TEST(VerifyOrderingTest, FamilyOrderings) {
  for (int n = 2; n <= 8; ++n) {
    const SimplicialComplex c = line_complex(friendship_graph(n));
    const auto order = ordering_from_facets(c, friendship_line_ordering(n));
    ExpectValidOrdering(verify_ordering(c, order, ShellingMethod::kResiduals));
  }
  for (int n = 4; n <= 8; ++n) {
    const SimplicialComplex c = line_complex(wheel_graph(n));
    const auto order = ordering_from_facets(c, wheel_line_ordering(n));
    ExpectValidOrdering(verify_ordering(c, order, ShellingMethod::kDefinition));
    ExpectValidOrdering(verify_ordering(c, order, ShellingMethod::kResiduals));

    const SimplicialComplex anti = anti_gallai_complex(wheel_graph(n));
    const auto anti_order =
        ordering_from_facets(anti, wheel_anti_gallai_ordering(n));
    ExpectValidOrdering(
        verify_ordering(anti, anti_order, ShellingMethod::kDefinition));
  }
}

TEST(VerifyOrderingTest, FailingOrderIsInconclusive) {
  // Consecutive triangles along a path meet in one vertex only.
  const SimplicialComplex c = Make({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
  const std::vector<std::size_t> bad = {0, 2, 1};
  for (ShellingMethod m : kMethods) {
    const auto cert = verify_ordering(c, bad, m);
    EXPECT_EQ(cert.verdict, Verdict::kInconclusive);
    EXPECT_EQ(cert.failed_step, std::optional<std::size_t>(1));
    EXPECT_FALSE(cert.steps[1].ok);
  }
  EXPECT_EQ(find_shelling_order(c, ShellingMethod::kDefinition).verdict,
            Verdict::kNotShellable);
}

TEST(VerifyOrderingTest, RejectsBadPermutations) {
  const SimplicialComplex c = Make({{1, 2}, {2, 3}});
  const std::vector<std::size_t> dup = {0, 0};
  const std::vector<std::size_t> short_order = {0};
  const std::vector<std::size_t> out_of_range = {0, 5};
  for (const auto* order : {&dup, &short_order, &out_of_range}) {
    EXPECT_THROW(verify_ordering(c, *order, ShellingMethod::kDefinition),
                 ShellingError);
  }
  const std::vector<Face> wrong = {{1, 2}, {1, 3}};
  EXPECT_THROW(ordering_from_facets(c, wrong), ShellingError);
}

TEST(GreedyTest, NeverRefutes) {
  const SimplicialComplex c5 = line_complex(cycle_graph(5));
  const auto cert = greedy_shelling_order(c5, ShellingMethod::kDefinition);
  EXPECT_EQ(cert.verdict, Verdict::kInconclusive);
  // Facet-count bound does not apply to greedy.
  ExpectValidOrdering(greedy_shelling_order(line_complex(wheel_graph(10)),
                                            ShellingMethod::kDefinition));
}

TEST(ShellingSearchTest, WheelAntiGallaiShellable) {
  for (int n = 3; n <= 12; ++n) {
    const SimplicialComplex c = anti_gallai_complex(wheel_graph(n));
    ExpectValidOrdering(find_shelling_order(c, ShellingMethod::kDefinition));
  }
}

TEST(ShellingSearchTest, PrismAndFriendshipAntiGallaiNotShellable) {
  for (int n = 2; n <= 8; ++n) {
    for (const SimpleGraph& g : {prism_graph(n), friendship_graph(n)}) {
      const SimplicialComplex c = anti_gallai_complex(g);
      for (ShellingMethod m : kMethods)
        EXPECT_EQ(find_shelling_order(c, m).verdict, Verdict::kNotShellable);
    }
  }
}

// Shellable complex counts over every graph on exactly n vertices, frozen
// from a brute-force memoised search written outside the library.
TEST(ShellingSearchTest, CorpusCountsMatchFrozenOracle) {
  const std::map<std::pair<int, ComplexKind>, int> expected = {
      {{2, ComplexKind::kLine}, 1},         {{2, ComplexKind::kGallai}, 1},
      {{3, ComplexKind::kLine}, 7},         {{3, ComplexKind::kGallai}, 7},
      {{3, ComplexKind::kAntiGallai}, 1},   {{4, ComplexKind::kLine}, 60},
      {{4, ComplexKind::kGallai}, 60},      {{4, ComplexKind::kAntiGallai}, 23},
      {{5, ComplexKind::kLine}, 956},       {{5, ComplexKind::kGallai}, 701},
      {{5, ComplexKind::kAntiGallai}, 621},
  };
  std::map<std::pair<int, ComplexKind>, int> got;
  std::map<int, int> non_void;
  testing::for_each_small_graph(5, 0, [&](int n, const SimpleGraph& g) {
    for (ComplexKind kind : {ComplexKind::kLine, ComplexKind::kGallai,
                             ComplexKind::kAntiGallai}) {
      const SimplicialComplex c = complex_of(g, kind);
      if (c.is_void()) continue;
      ++non_void[n];
      const auto def = find_shelling_order(c, ShellingMethod::kDefinition);
      const auto res = find_shelling_order(c, ShellingMethod::kResiduals);
      ASSERT_EQ(def.verdict, res.verdict);
      if (def.verdict == Verdict::kShellable) {
        ++got[{n, kind}];
        ExpectValidOrdering(def);
      }
    }
  });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(non_void, (std::map<int, int>{{2, 2}, {3, 15}, {4, 149},
                                          {5, 2682}}));
}

TEST(ShellingSearchTest, AgreesWithPermutationOracle) {
  std::size_t checked = 0;
  testing::for_each_small_graph(4, 0, [&](int, const SimpleGraph& g) {
    for (ComplexKind kind : {ComplexKind::kLine, ComplexKind::kGallai,
                             ComplexKind::kAntiGallai}) {
      const SimplicialComplex c = complex_of(g, kind);
      if (c.is_void() || c.facet_count() > 6) continue;
      ++checked;
      const bool want = testing::shellable_by_permutations(c);
      ASSERT_EQ(find_shelling_order(c, ShellingMethod::kDefinition).verdict ==
                    Verdict::kShellable,
                want);
    }
  });
  EXPECT_GT(checked, 100u);
}

TEST(StepAgreementTest, CorpusAndFamilies) {
  testing::for_each_small_graph(5, 0, [](int, const SimpleGraph& g) {
    for (ComplexKind kind : {ComplexKind::kLine, ComplexKind::kGallai,
                             ComplexKind::kAntiGallai}) {
      const SimplicialComplex c = complex_of(g, kind);
      if (c.is_void() || c.facet_count() > 12) continue;
      ASSERT_TRUE(compare_step_predicates(c, 12).agree());
    }
  });
  const SimplicialComplex c5 = line_complex(cycle_graph(5));
  const StepAgreement a = compare_step_predicates(c5);
  // 5 facets: sum over non-empty masks of the facets outside them.
  EXPECT_EQ(a.pairs_checked, 75u);
  EXPECT_TRUE(a.agree());
  EXPECT_THROW(compare_step_predicates(line_complex(wheel_graph(8)), 16),
               ShellingError);
}

TEST(StepPassesTest, MatchesVerifyOrdering) {
  const SimplicialComplex c = line_complex(wheel_graph(4));
  const auto order = ordering_from_facets(c, wheel_line_ordering(4));
  std::uint64_t mask = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0) {
      for (ShellingMethod m : kMethods)
        EXPECT_TRUE(step_passes(c, mask, order[pos], m));
    }
    mask |= std::uint64_t{1} << order[pos];
  }
  EXPECT_THROW(step_passes(c, 0, 0, ShellingMethod::kDefinition),
               ShellingError);
  EXPECT_THROW(step_passes(c, 1, 0, ShellingMethod::kDefinition),
               ShellingError);
}

TEST(VerdictNamesTest, RoundTrip) {
  EXPECT_EQ(to_string(Verdict::kShellable), "SHELLABLE");
  EXPECT_EQ(to_string(Verdict::kNotShellable), "NOT_SHELLABLE");
  EXPECT_EQ(to_string(Verdict::kInconclusive), "INCONCLUSIVE");
  EXPECT_EQ(parse_shelling_method("definition"), ShellingMethod::kDefinition);
  EXPECT_EQ(parse_shelling_method("residuals"), ShellingMethod::kResiduals);
  EXPECT_FALSE(parse_shelling_method("both").has_value());
}

}  // namespace
}  // namespace simplicial_lines
