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

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "simplicial_lines/error.hpp"
#include "simplicial_lines/monomial.hpp"

namespace simplicial_lines {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kShellable:
      return "SHELLABLE";
    case Verdict::kNotShellable:
      return "NOT_SHELLABLE";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string_view to_string(ShellingMethod method) {
  return method == ShellingMethod::kDefinition ? "definition" : "residuals";
}

std::optional<ShellingMethod> parse_shelling_method(std::string_view name) {
  if (name == "definition") return ShellingMethod::kDefinition;
  if (name == "residuals") return ShellingMethod::kResiduals;
  return std::nullopt;
}

StepCheck shelling_step_ok(std::span<const Face> prefix, const Face& facet) {
  if (prefix.empty()) {
    throw ShellingError(ShellingError::Kind::kEmptyPrefix,
                        "the first facet of an ordering has no step test");
  }
  std::vector<Face> meets;
  meets.reserve(prefix.size());
  for (const Face& p : prefix) meets.push_back(intersection(p, facet));
  std::sort(meets.begin(), meets.end());
  meets.erase(std::unique(meets.begin(), meets.end()), meets.end());

  StepCheck check;
  for (const Face& m : meets) {
    const bool dominated =
        std::any_of(meets.begin(), meets.end(), [&](const Face& other) {
          return other.size() > m.size() && m.is_subset_of(other);
        });
    if (!dominated) check.maximal_intersections.push_back(m);
  }
  check.ok = std::all_of(
      check.maximal_intersections.begin(), check.maximal_intersections.end(),
      [&](const Face& m) { return m.size() + 1 == facet.size(); });
  return check;
}

namespace {

// Step predicate over predecessor bitmasks for one complex and one method.
// The definition side goes through Face intersections, the residual side
// through Monomial quotients; neither reuses the other.
class StepOracle {
 public:
  StepOracle(const SimplicialComplex& complex, ShellingMethod method)
      : facets_(complex.facets()), method_(method) {
    for (const Face& f : facets_) monomials_.emplace_back(f);
  }

  std::size_t size() const { return facets_.size(); }

  // `prefix` lists the indices of the earlier facets.
  ShellingStep evaluate(std::span<const std::size_t> prefix,
                        std::size_t next) {
    ShellingStep step;
    step.facet = next;
    if (method_ == ShellingMethod::kDefinition) {
      face_buffer_.clear();
      for (std::size_t k : prefix) face_buffer_.push_back(facets_[k]);
      StepCheck check = shelling_step_ok(face_buffer_, facets_[next]);
      step.ok = check.ok;
      step.evidence = std::move(check.maximal_intersections);
    } else {
      monomial_buffer_.clear();
      for (std::size_t k : prefix) monomial_buffer_.push_back(monomials_[k]);
      ResidualStep r = linear_residual_step(monomial_buffer_, monomials_[next]);
      step.ok = r.linear;
      for (const Monomial& m : r.minimal) step.evidence.push_back(m.support());
    }
    return step;
  }

  bool passes(std::uint64_t mask, std::size_t next) {
    index_buffer_.clear();
    for_each_bit(mask, [&](std::size_t k) { index_buffer_.push_back(k); });
    return evaluate(index_buffer_, next).ok;
  }

 private:
  template <typename Fn>
  static void for_each_bit(std::uint64_t mask, Fn&& fn) {
    while (mask != 0) {
      fn(static_cast<std::size_t>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
  }

  const std::vector<Face>& facets_;
  ShellingMethod method_;
  std::vector<Monomial> monomials_;
  std::vector<Face> face_buffer_;
  std::vector<Monomial> monomial_buffer_;
  std::vector<std::size_t> index_buffer_;
};

void require_non_void(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw ComplexError("shellability is not defined for the void complex");
  }
}

void require_within(std::size_t facets, std::size_t bound) {
  const std::size_t limit = std::min(bound, kHardMaxFacets);
  if (facets > limit) {
    throw ShellingError(ShellingError::Kind::kBoundExceeded,
                        std::to_string(facets) +
                            " facets exceed the search bound of " +
                            std::to_string(limit) +
                            "; supply a candidate ordering instead");
  }
}

void validate_permutation(std::span<const std::size_t> ordering,
                          std::size_t count) {
  std::vector<bool> seen(count, false);
  if (ordering.size() != count) {
    throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                        "ordering has " + std::to_string(ordering.size()) +
                            " entries for " + std::to_string(count) +
                            " facets");
  }
  for (std::size_t index : ordering) {
    if (index >= count || seen[index]) {
      throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                          "ordering is not a permutation of the facets");
    }
    seen[index] = true;
  }
}

// Records predecessor sets proven impossible to complete.
class DeadSets {
 public:
  explicit DeadSets(std::size_t facets) {
    if (facets <= kDenseLimit) dense_.assign(std::size_t{1} << facets, false);
  }
  bool contains(std::uint64_t mask) const {
    return dense_.empty() ? sparse_.contains(mask) : dense_[mask];
  }
  void insert(std::uint64_t mask) {
    if (dense_.empty()) {
      sparse_.insert(mask);
    } else {
      dense_[mask] = true;
    }
  }

 private:
  static constexpr std::size_t kDenseLimit = 26;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

class Search {
 public:
  Search(StepOracle& oracle)
      : oracle_(oracle),
        dead_(oracle.size()),
        full_(oracle.size() == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << oracle.size()) - 1) {}

  bool run() { return extend(0); }
  const std::vector<std::size_t>& ordering() const { return ordering_; }
  std::uint64_t states() const { return states_; }

 private:
  bool extend(std::uint64_t mask) {
    if (mask == full_) return true;
    if (dead_.contains(mask)) return false;
    ++states_;
    for (std::size_t next = 0; next < oracle_.size(); ++next) {
      const std::uint64_t bit = std::uint64_t{1} << next;
      if (mask & bit) continue;
      if (mask != 0 && !oracle_.passes(mask, next)) continue;
      ordering_.push_back(next);
      if (extend(mask | bit)) return true;
      ordering_.pop_back();
    }
    dead_.insert(mask);
    return false;
  }

  StepOracle& oracle_;
  DeadSets dead_;
  std::uint64_t full_;
  std::vector<std::size_t> ordering_;
  std::uint64_t states_ = 0;
};

}  // namespace

ShellingCertificate verify_ordering(const SimplicialComplex& complex,
                                    std::span<const std::size_t> ordering,
                                    ShellingMethod method) {
  require_non_void(complex);
  validate_permutation(ordering, complex.facet_count());

  StepOracle oracle(complex, method);
  ShellingCertificate cert;
  cert.method = method;
  cert.facets = complex.facets();
  cert.ordering.assign(ordering.begin(), ordering.end());
  for (std::size_t pos = 0; pos < ordering.size(); ++pos) {
    ShellingStep step;
    step.facet = ordering[pos];
    if (pos > 0) step = oracle.evaluate(ordering.first(pos), ordering[pos]);
    if (!step.ok && !cert.failed_step) cert.failed_step = pos;
    cert.steps.push_back(std::move(step));
  }
  if (cert.failed_step) {
    cert.verdict = Verdict::kInconclusive;
    cert.note = "ordering fails at position " +
                std::to_string(*cert.failed_step) +
                "; other orderings were not examined";
  } else {
    cert.verdict = Verdict::kShellable;
    cert.note = "every step of the given ordering passes";
  }
  return cert;
}

ShellingCertificate find_shelling_order(const SimplicialComplex& complex,
                                        ShellingMethod method,
                                        SearchOptions options) {
  require_non_void(complex);
  require_within(complex.facet_count(), options.max_facets);

  StepOracle oracle(complex, method);
  Search search(oracle);
  if (search.run()) {
    ShellingCertificate cert =
        verify_ordering(complex, search.ordering(), method);
    cert.states_explored = search.states();
    cert.note = "ordering found by exhaustive search";
    return cert;
  }
  ShellingCertificate cert;
  cert.verdict = Verdict::kNotShellable;
  cert.method = method;
  cert.facets = complex.facets();
  cert.states_explored = search.states();
  cert.note = "exhaustive search over " + std::to_string(search.states()) +
              " reachable predecessor sets found no valid extension";
  return cert;
}

ShellingCertificate greedy_shelling_order(const SimplicialComplex& complex,
                                          ShellingMethod method) {
  require_non_void(complex);

  StepOracle oracle(complex, method);
  std::vector<std::size_t> ordering;
  std::vector<bool> placed(oracle.size(), false);
  while (ordering.size() < oracle.size()) {
    std::optional<std::size_t> chosen;
    for (std::size_t next = 0; next < oracle.size() && !chosen; ++next) {
      if (placed[next]) continue;
      if (ordering.empty() || oracle.evaluate(ordering, next).ok) {
        chosen = next;
      }
    }
    if (!chosen) {
      ShellingCertificate cert;
      cert.verdict = Verdict::kInconclusive;
      cert.method = method;
      cert.facets = complex.facets();
      cert.ordering = ordering;
      cert.note = "greedy extension stalled after " +
                  std::to_string(ordering.size()) + " facets";
      return cert;
    }
    ordering.push_back(*chosen);
    placed[*chosen] = true;
  }
  ShellingCertificate cert = verify_ordering(complex, ordering, method);
  cert.note = "ordering found by greedy extension";
  return cert;
}

std::vector<std::size_t> ordering_from_facets(const SimplicialComplex& complex,
                                              std::span<const Face> facets) {
  const auto& all = complex.facets();
  std::vector<std::size_t> ordering;
  ordering.reserve(facets.size());
  for (const Face& f : facets) {
    auto it = std::lower_bound(all.begin(), all.end(), f);
    if (it == all.end() || *it != f) {
      throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                          f.to_string() + " is not a facet of the complex");
    }
    ordering.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  validate_permutation(ordering, all.size());
  return ordering;
}

bool step_passes(const SimplicialComplex& complex, std::uint64_t prefix_mask,
                 std::size_t next, ShellingMethod method) {
  require_within(complex.facet_count(), kHardMaxFacets);
  if (next >= complex.facet_count() || prefix_mask == 0 ||
      (prefix_mask >> next) & 1u ||
      (complex.facet_count() < 64 &&
       (prefix_mask >> complex.facet_count()) != 0)) {
    throw ShellingError(ShellingError::Kind::kInvalidOrdering,
                        "invalid predecessor set or facet index");
  }
  StepOracle oracle(complex, method);
  return oracle.passes(prefix_mask, next);
}

StepAgreement compare_step_predicates(const SimplicialComplex& complex,
                                      std::size_t max_facets) {
  require_within(complex.facet_count(), std::min<std::size_t>(max_facets, 30));
  StepOracle definition(complex, ShellingMethod::kDefinition);
  StepOracle residuals(complex, ShellingMethod::kResiduals);
  const std::size_t r = complex.facet_count();
  StepAgreement agreement;
  const std::uint64_t limit = std::uint64_t{1} << r;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    for (std::size_t next = 0; next < r; ++next) {
      if ((mask >> next) & 1u) continue;
      ++agreement.pairs_checked;
      if (definition.passes(mask, next) != residuals.passes(mask, next)) {
        ++agreement.mismatches;
        if (!agreement.first_mismatch) {
          agreement.first_mismatch = std::make_pair(mask, next);
        }
      }
    }
  }
  return agreement;
}

}  // namespace simplicial_lines
