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

#ifndef SIMPLICIAL_LINES_MONOMIAL_HPP_
#define SIMPLICIAL_LINES_MONOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simplicial_lines/certificate.hpp"
#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/face.hpp"

namespace simplicial_lines {

// Squarefree monomial, identified with its support. Variables are indexed
// by vertex labels: x_v for v in the support. Degree 0 is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Face support) : support_(std::move(support)) {}
  Monomial(std::initializer_list<Vertex> variables) : support_(variables) {}

  const Face& support() const noexcept { return support_; }
  std::size_t degree() const noexcept { return support_.size(); }
  bool is_unit() const noexcept { return support_.empty(); }
  bool is_linear() const noexcept { return support_.size() == 1; }

  // this | other
  bool divides(const Monomial& other) const {
    return support_.is_subset_of(other.support_);
  }

  // "x1x2x3"; the unit renders as "1".
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Face support_;
};

Monomial gcd_monomial(const Monomial& a, const Monomial& b);
// a / b. Throws MonomialError unless b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);

// Members not strictly divisible by another member, deduplicated and
// sorted. They generate the same ideal as the input. Throws MonomialError
// if the unit monomial is present.
std::vector<Monomial> minimal_generators(std::span<const Monomial> monomials);

// Ordered generator list of the facet ideal of a complex.
struct FacetIdeal {
  std::vector<Vertex> variables;
  std::vector<Monomial> generators;
};

// Generator i is the product of the variables of facet order[i]. Throws
// ComplexError on the void complex, ShellingError on a bad permutation.
FacetIdeal facet_ideal(const SimplicialComplex& complex,
                       std::span<const std::size_t> order);
FacetIdeal facet_ideal(const SimplicialComplex& complex);

// { m_i / gcd(m_k, m_i) : k < i } for the 0-based position i >= 1.
std::vector<Monomial> residual_set(const FacetIdeal& ideal,
                                   std::size_t position);

struct ResidualStep {
  bool linear = false;
  std::vector<Monomial> minimal;
};

// Residual test for a single step given the set of earlier generators;
// their order does not matter.
ResidualStep linear_residual_step(std::span<const Monomial> earlier,
                                  const Monomial& next);
ResidualStep step_linear(const FacetIdeal& ideal, std::size_t position);

// Checks every step of the ideal's own generator order. The verdict is
// SHELLABLE when all steps are linear, INCONCLUSIVE otherwise: one failing
// order does not rule out another. Throws ShellingError if two generators
// divide one another.
ShellingCertificate has_linear_residuals(const FacetIdeal& ideal);

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_MONOMIAL_HPP_
