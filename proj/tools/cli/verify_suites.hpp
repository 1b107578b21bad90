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

#ifndef SIMPLICIAL_LINES_TOOLS_VERIFY_SUITES_HPP_
#define SIMPLICIAL_LINES_TOOLS_VERIFY_SUITES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplicial_lines/serialization.hpp"

namespace simplicial_lines::cli {

struct SuiteRow {
  std::string item;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteRow> rows;

  bool passed() const;
};

// Canonical suite names in run order.
const std::vector<std::string>& suite_names();

// Returns the suite name if known, nullopt otherwise.
std::optional<std::string> canonical_suite_name(std::string_view name);

// `max_n` bounds the family parameter (family suites) or the vertex count of
// the exhaustive corpus (corpus suites); unset means the suite default.
// Throws std::invalid_argument for unknown names or out-of-range bounds.
SuiteResult run_suite(std::string_view name, std::optional<int> max_n = {});

Json suite_to_json(const SuiteResult& result);
std::string suite_to_text(const SuiteResult& result);

}  // namespace simplicial_lines::cli

#endif  // SIMPLICIAL_LINES_TOOLS_VERIFY_SUITES_HPP_
