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

#ifndef SIMPLICIAL_LINES_SHELLING_HPP_
#define SIMPLICIAL_LINES_SHELLING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplicial_lines/certificate.hpp"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/face.hpp"

namespace simplicial_lines {

struct StepCheck {
  bool ok = false;
  // Inclusion-maximal members of { P ∩ facet : P in prefix }.
  std::vector<Face> maximal_intersections;
};

// Shelling step in the non-pure sense: the complex generated by the prefix
// meets <facet> in a pure complex of dimension |facet| - 2, i.e. every
// maximal intersection has |facet| - 1 vertices. Throws ShellingError if
// the prefix is empty.
StepCheck shelling_step_ok(std::span<const Face> prefix, const Face& facet);

// Default exhaustive-search bound on the number of facets.
inline constexpr std::size_t kDefaultMaxFacets = 20;
// Predecessor sets are 64-bit masks.
inline constexpr std::size_t kHardMaxFacets = 64;

struct SearchOptions {
  std::size_t max_facets = kDefaultMaxFacets;
};

// Checks the given facet permutation step by step. SHELLABLE when every
// step passes, otherwise INCONCLUSIVE with `failed_step` set. Any facet
// count is accepted. Throws
// ShellingError for a non-permutation and ComplexError for the void complex.
ShellingCertificate verify_ordering(const SimplicialComplex& complex,
                                    std::span<const std::size_t> ordering,
                                    ShellingMethod method);

// Exhaustive depth-first search over predecessor sets. Both step predicates
// depend only on the set of earlier facets, so a set that cannot be
// completed is recorded once and never expanded again. Returns a witnessing
// ordering or NOT_SHELLABLE after the whole space is exhausted. Throws
// ShellingError(kBoundExceeded) when the facet count exceeds
// options.max_facets or kHardMaxFacets.
ShellingCertificate find_shelling_order(const SimplicialComplex& complex,
                                        ShellingMethod method,
                                        SearchOptions options = {});

// Repeatedly appends the lowest-index facet that passes the step test. No
// facet-count bound applies.
// SHELLABLE with a verified ordering, or INCONCLUSIVE if it gets stuck;
// never NOT_SHELLABLE.
ShellingCertificate greedy_shelling_order(const SimplicialComplex& complex,
                                          ShellingMethod method);

// Maps a list of facets to their indices in complex.facets(). Throws
// ShellingError unless `facets` is a permutation of the facet set.
std::vector<std::size_t> ordering_from_facets(const SimplicialComplex& complex,
                                              std::span<const Face> facets);

// Evaluates one step predicate for the predecessor set `prefix_mask`
// (bit k = facet k) and candidate facet `next`. Requires a non-empty mask
// not containing `next`, and at most kHardMaxFacets facets.
bool step_passes(const SimplicialComplex& complex, std::uint64_t prefix_mask,
                 std::size_t next, ShellingMethod method);

struct StepAgreement {
  std::uint64_t pairs_checked = 0;
  std::uint64_t mismatches = 0;
  // First disagreeing (prefix mask, facet) pair.
  std::optional<std::pair<std::uint64_t, std::size_t>> first_mismatch;

  bool agree() const noexcept { return mismatches == 0; }
};

// Compares the definition and residual predicates on every (non-empty
// predecessor set, facet outside it) pair. Throws ShellingError when the
// complex has more than `max_facets` facets.
StepAgreement compare_step_predicates(const SimplicialComplex& complex,
                                      std::size_t max_facets = 16);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_SHELLING_HPP_
