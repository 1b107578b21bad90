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

#ifndef SIMPLICIAL_LINES_CERTIFICATE_HPP_
#define SIMPLICIAL_LINES_CERTIFICATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplicial_lines/face.hpp"

namespace simplicial_lines {

enum class Verdict { kShellable, kNotShellable, kInconclusive };

// Which step predicate decides an ordering: the intersection-purity
// definition, or linearity of the facet-ideal residuals.
enum class ShellingMethod { kDefinition, kResiduals };

std::string_view to_string(Verdict verdict);          // "SHELLABLE", ...
std::string_view to_string(ShellingMethod method);    // "definition", ...
std::optional<ShellingMethod> parse_shelling_method(std::string_view name);

struct ShellingStep {
  // Index into ShellingCertificate::facets.
  std::size_t facet = 0;
  bool ok = true;
  // Definition: the maximal faces of (earlier facets) meet (this facet).
  // Residuals: supports of the minimal generators of the residual set.
  // Empty for the first facet.
  std::vector<Face> evidence;
};

struct ShellingCertificate {
  Verdict verdict = Verdict::kInconclusive;
  ShellingMethod method = ShellingMethod::kDefinition;
  std::vector<Face> facets;
  // Facet indices in shelling order. Complete for SHELLABLE; for a checked
  // ordering that failed it is the ordering that was checked.
  std::vector<std::size_t> ordering;
  std::vector<ShellingStep> steps;
  // Position in `ordering` of the first failing step, if any.
  std::optional<std::size_t> failed_step;
  // Number of predecessor sets expanded by an exhaustive search.
  std::uint64_t states_explored = 0;
  std::string note;
};

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_CERTIFICATE_HPP_
