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

#include "simplicial_lines/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::string out;
  for (Vertex v : support_) out += "x" + std::to_string(v);
  return out;
}

Monomial gcd_monomial(const Monomial& a, const Monomial& b) {
  return Monomial(intersection(a.support(), b.support()));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) {
    throw MonomialError(b.to_string() + " does not divide " + a.to_string());
  }
  return Monomial(difference(a.support(), b.support()));
}

std::vector<Monomial> minimal_generators(std::span<const Monomial> monomials) {
  std::vector<Monomial> sorted(monomials.begin(), monomials.end());
  for (const Monomial& m : sorted) {
    if (m.is_unit()) {
      throw MonomialError("unit monomial generates the whole ring");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> out;
  for (const Monomial& m : sorted) {
    const bool redundant =
        std::any_of(sorted.begin(), sorted.end(), [&](const Monomial& d) {
          return d != m && d.divides(m);
        });
    if (!redundant) out.push_back(m);
  }
  return out;
}

FacetIdeal facet_ideal(const SimplicialComplex& complex,
                       std::span<const std::size_t> order) {
  if (complex.is_void()) {
    throw ComplexError("the void complex has no facet ideal");
  }
  const auto& facets = complex.facets();
  std::vector<bool> seen(facets.size(), false);
  if (order.size() != facets.size()) {
    throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                        "ordering must list each of the " +
                            std::to_string(facets.size()) + " facets once");
  }
  FacetIdeal ideal;
  ideal.variables = complex.vertices();
  for (std::size_t index : order) {
    if (index >= facets.size() || seen[index]) {
      throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                          "ordering is not a permutation of the facets");
    }
    seen[index] = true;
    ideal.generators.emplace_back(facets[index]);
  }
  return ideal;
}

FacetIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<std::size_t> identity(complex.facet_count());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  return facet_ideal(complex, identity);
}

namespace {

std::vector<Monomial> residuals(std::span<const Monomial> earlier,
                                const Monomial& next) {
  std::vector<Monomial> out;
  out.reserve(earlier.size());
  for (const Monomial& m : earlier) {
    out.push_back(quotient(next, gcd_monomial(m, next)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_position(const FacetIdeal& ideal, std::size_t position) {
  if (position < 1 || position >= ideal.generators.size()) {
    throw ShellingError(ShellingError::Kind::kIndexOutOfRange,
                        "residual position " + std::to_string(position) +
                            " outside 1.." +
                            std::to_string(ideal.generators.size()) + "-1");
  }
}

}  // namespace

std::vector<Monomial> residual_set(const FacetIdeal& ideal,
                                   std::size_t position) {
  require_position(ideal, position);
  std::span<const Monomial> all(ideal.generators);
  return residuals(all.first(position), all[position]);
}

ResidualStep linear_residual_step(std::span<const Monomial> earlier,
                                  const Monomial& next) {
  ResidualStep step;
  step.minimal = minimal_generators(residuals(earlier, next));
  step.linear = std::all_of(step.minimal.begin(), step.minimal.end(),
                            [](const Monomial& m) { return m.is_linear(); });
  return step;
}

ResidualStep step_linear(const FacetIdeal& ideal, std::size_t position) {
  require_position(ideal, position);
  std::span<const Monomial> all(ideal.generators);
  return linear_residual_step(all.first(position), all[position]);
}

ShellingCertificate has_linear_residuals(const FacetIdeal& ideal) {
  const auto& gens = ideal.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[i].divides(gens[j])) {
        throw ShellingError(ShellingError::Kind::kNonMinimalSystem,
                            gens[i].to_string() + " divides " +
                                gens[j].to_string());
      }
    }
  }
  ShellingCertificate cert;
  cert.method = ShellingMethod::kResiduals;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cert.facets.push_back(gens[i].support());
    cert.ordering.push_back(i);
    ShellingStep step;
    step.facet = i;
    if (i > 0) {
      ResidualStep r = step_linear(ideal, i);
      step.ok = r.linear;
      for (const Monomial& m : r.minimal) step.evidence.push_back(m.support());
    }
    if (!step.ok && !cert.failed_step) cert.failed_step = i;
    cert.steps.push_back(std::move(step));
  }
  if (cert.failed_step) {
    cert.verdict = Verdict::kInconclusive;
    cert.note = "residuals are not linear at position " +
                std::to_string(*cert.failed_step) +
                " of the given order; other orders were not examined";
  } else {
    cert.verdict = Verdict::kShellable;
    cert.note = "every residual set is minimally generated by variables";
  }
  return cert;
}

}  // namespace simplicial_lines
