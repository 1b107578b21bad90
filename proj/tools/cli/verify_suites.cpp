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

#include "verify_suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/families.hpp"
#include "simplicial_lines/graph.hpp"
#include "simplicial_lines/indices.hpp"
#include "simplicial_lines/orderings.hpp"
#include "simplicial_lines/shelling.hpp"
#include "simplicial_lines/theorems.hpp"

namespace simplicial_lines::cli {

namespace {

constexpr ComplexKind kAllKinds[] = {ComplexKind::kLine, ComplexKind::kGallai,
                                     ComplexKind::kAntiGallai};

SuiteRow row(std::string item, const std::string& expected,
             const std::string& computed) {
  return SuiteRow{std::move(item), expected, computed, expected == computed};
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string faces_text(const std::vector<Face>& faces) {
  std::string out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i > 0) out += ' ';
    out += faces[i].to_string();
  }
  return out;
}

int bound(std::optional<int> max_n, int fallback, int lowest, int highest) {
  const int n = max_n.value_or(fallback);
  if (n < lowest || n > highest) {
    throw std::invalid_argument("--max-n must lie in " + std::to_string(lowest) +
                                ".." + std::to_string(highest) +
                                " for this suite");
  }
  return n;
}

// Visits every graph on 1..max_vertices vertices with the given minimum
// degree, grouped by vertex count.
void for_each_corpus_graph(
    int max_vertices, int min_degree,
    const std::function<void(int, const SimpleGraph&)>& visit) {
  for (int n = 1; n <= max_vertices; ++n) {
    for_each_graph(n, min_degree,
                   [&](const SimpleGraph& g) { visit(n, g); });
  }
}

// Counts per vertex count, turned into one row per n.
struct Tally {
  std::map<int, std::pair<std::size_t, std::size_t>> by_n;  // (passed, total)

  void add(int n, bool ok) {
    auto& [passed, total] = by_n[n];
    ++total;
    if (ok) ++passed;
  }

  void emit(SuiteResult& result, const std::string& unit) const {
    for (const auto& [n, counts] : by_n) {
      result.rows.push_back(row("n=" + std::to_string(n),
                                str(counts.second) + "/" + str(counts.second) +
                                    " " + unit,
                                str(counts.first) + "/" + str(counts.second) +
                                    " " + unit));
    }
  }
};

// All non-empty subsets of the vertex set that lie in some facet.
FVector brute_force_f_vector(const SimplicialComplex& complex) {
  const auto& vs = complex.vertices();
  if (vs.size() > 16) throw std::invalid_argument("too many vertices");
  std::vector<std::int64_t> counts(vs.size(), 0);
  for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
    std::vector<Vertex> subset;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask & (1u << i)) subset.push_back(vs[i]);
    }
    if (complex.contains_face(Face(subset))) ++counts[subset.size() - 1];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return FVector{counts};
}

SuiteResult wheel_euler(std::optional<int> max_n) {
  SuiteResult r{"wheel-euler", {}};
  for (int n = 4; n <= bound(max_n, 12, 4, 200); ++n) {
    const SimplicialComplex line = line_complex(wheel_graph(n));
    const FVector f = f_vector(line);
    const std::int64_t half = std::int64_t{n} * (n + 1) / 2;
    r.rows.push_back(row("n=" + str(n),
                         "chi=" + str(n + 1) + " a1=" + str(half) +
                             " a2=" + str(half),
                         "chi=" + str(euler_characteristic(f)) +
                             " a1=" + str(f.counts.at(1)) +
                             " a2=" + str(f.counts.at(2))));
  }
  return r;
}

SuiteResult wheel_decomposition(std::optional<int> max_n) {
  SuiteResult r{"wheel-decomposition", {}};
  for (int n = 4; n <= bound(max_n, 12, 4, 200); ++n) {
    const SimpleGraph g = wheel_graph(n);
    r.rows.push_back(
        row("n=" + str(n), "chi_gallai=1 anti_gallai=" + str(n),
            "chi_gallai=" + str(euler_characteristic(gallai_complex(g))) +
                " anti_gallai=" + str(anti_gallai_indices(g).size())));
  }
  return r;
}

SuiteResult friendship(std::optional<int> max_n) {
  SuiteResult r{"friendship", {}};
  for (int n = 2; n <= bound(max_n, 10, 2, 100); ++n) {
    const SimpleGraph g = friendship_graph(n);
    const FVector gallai_f = f_vector(gallai_complex(g));
    r.rows.push_back(row(
        "n=" + str(n),
        "chi_gallai=" + str(1 - n) + " chi_line=1 anti_gallai=" + str(n) +
            " gallai_a2=" + str(2 * n * (n - 1)),
        "chi_gallai=" + str(euler_characteristic(gallai_f)) +
            " chi_line=" + str(euler_characteristic(line_complex(g))) +
            " anti_gallai=" + str(anti_gallai_indices(g).size()) +
            " gallai_a2=" + str(gallai_f.counts.at(2))));
  }
  return r;
}

SuiteResult worked_example(std::optional<int>) {
  SuiteResult r{"worked-example", {}};
  const SimpleGraph g = make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const SimplicialComplex line = line_complex(g);
  const SimplicialComplex gallai = gallai_complex(g);
  r.rows.push_back(row("line facets", "{1,2,3} {1,3,4} {2,3,4}",
                       faces_text(line.facets())));
  r.rows.push_back(row("line chi", "1", str(euler_characteristic(line))));
  r.rows.push_back(row("gallai facets", "{1,2} {1,3,4} {2,3,4}",
                       faces_text(gallai.facets())));
  r.rows.push_back(row("gallai chi", "0", str(euler_characteristic(gallai))));
  r.rows.push_back(row("anti-gallai indices", "{1,2,3}",
                       faces_text(anti_gallai_indices(g).members)));
  return r;
}

SuiteResult euler_decomposition_exhaustive(std::optional<int> max_n) {
  SuiteResult r{"euler-decomposition-exhaustive", {}};
  Tally tally;
  for_each_corpus_graph(bound(max_n, 5, 1, kMaxEnumerationVertices), 1,
                        [&](int n, const SimpleGraph& g) {
                          tally.add(n, check_euler_decomposition(g).holds());
                        });
  tally.emit(r, "graphs");
  return r;
}

SuiteResult connectivity_exhaustive(std::optional<int> max_n) {
  SuiteResult r{"connectivity-exhaustive", {}};
  Tally tally;
  for_each_corpus_graph(
      bound(max_n, 5, 1, kMaxEnumerationVertices), 1,
      [&](int n, const SimpleGraph& g) {
        const ConnectivityCheck c = check_connectivity_correspondence(g);
        tally.add(n, c.holds() && c.graph_components == c.complex_components);
      });
  tally.emit(r, "graphs");
  return r;
}

std::string search_verdicts(const SimplicialComplex& c,
                            std::size_t max_facets = kDefaultMaxFacets) {
  SearchOptions options{max_facets};
  const auto d = find_shelling_order(c, ShellingMethod::kDefinition, options);
  const auto s = find_shelling_order(c, ShellingMethod::kResiduals, options);
  if (d.verdict == s.verdict) return std::string(to_string(d.verdict));
  return std::string(to_string(d.verdict)) + "/" +
         std::string(to_string(s.verdict));
}

std::string ordering_verdicts(const SimplicialComplex& c,
                              const std::vector<Face>& facets) {
  const auto ordering = ordering_from_facets(c, facets);
  const auto d = verify_ordering(c, ordering, ShellingMethod::kDefinition);
  const auto s = verify_ordering(c, ordering, ShellingMethod::kResiduals);
  if (d.verdict == s.verdict) return std::string(to_string(d.verdict));
  return std::string(to_string(d.verdict)) + "/" +
         std::string(to_string(s.verdict));
}

SuiteResult shellability(std::optional<int>) {
  SuiteResult r{"shellability", {}};
  for (int n = 2; n <= 5; ++n) {
    // Facet counts 6, 15, 28, 45: the search bound is raised to the hard
    // limit so n = 4, 5 are still searched rather than just verified.
    r.rows.push_back(row("friendship line n=" + str(n) + " search",
                         "SHELLABLE",
                         search_verdicts(line_complex(friendship_graph(n)),
                                         kHardMaxFacets)));
  }
  for (int n = 2; n <= 8; ++n) {
    r.rows.push_back(row("friendship line n=" + str(n) + " hub-pair ordering",
                         "SHELLABLE",
                         ordering_verdicts(line_complex(friendship_graph(n)),
                                           friendship_line_ordering(n))));
  }
  for (int n = 4; n <= 8; ++n) {
    r.rows.push_back(row("wheel line n=" + str(n) + " hub-then-rim ordering",
                         "SHELLABLE",
                         ordering_verdicts(line_complex(wheel_graph(n)),
                                           wheel_line_ordering(n))));
  }
  for (int n = 4; n <= 5; ++n) {
    r.rows.push_back(row("wheel line n=" + str(n) + " search", "SHELLABLE",
                         search_verdicts(line_complex(wheel_graph(n)))));
  }
  for (int n = 3; n <= 12; ++n) {
    r.rows.push_back(row("wheel anti-gallai n=" + str(n) + " search",
                         "SHELLABLE",
                         search_verdicts(anti_gallai_complex(wheel_graph(n)))));
  }
  r.rows.push_back(row("cycle line n=5 search", "NOT_SHELLABLE",
                       search_verdicts(line_complex(cycle_graph(5)))));
  for (int n = 2; n <= 8; ++n) {
    r.rows.push_back(row("prism anti-gallai n=" + str(n) + " search",
                         "NOT_SHELLABLE",
                         search_verdicts(anti_gallai_complex(prism_graph(n)))));
    r.rows.push_back(
        row("friendship anti-gallai n=" + str(n) + " search", "NOT_SHELLABLE",
            search_verdicts(anti_gallai_complex(friendship_graph(n)))));
  }
  return r;
}

// Verdicts of both searches agree and both step predicates agree on every
// (predecessor set, facet) pair.
bool methods_agree(const SimplicialComplex& c) {
  const auto d = find_shelling_order(c, ShellingMethod::kDefinition);
  const auto s = find_shelling_order(c, ShellingMethod::kResiduals);
  return d.verdict == s.verdict && compare_step_predicates(c).agree();
}

SuiteResult oracle_equivalence(std::optional<int> max_n) {
  SuiteResult r{"oracle-equivalence", {}};
  Tally tally;
  for_each_corpus_graph(bound(max_n, 5, 1, 5), 0,
                        [&](int n, const SimpleGraph& g) {
                          for (ComplexKind kind : kAllKinds) {
                            const SimplicialComplex c = complex_of(g, kind);
                            if (!c.is_void()) tally.add(n, methods_agree(c));
                          }
                        });
  tally.emit(r, "complexes");

  std::vector<std::pair<std::string, SimplicialComplex>> families;
  for (int n = 2; n <= 8; ++n) {
    families.emplace_back("friendship line n=" + str(n),
                          line_complex(friendship_graph(n)));
    families.emplace_back("prism anti-gallai n=" + str(n),
                          anti_gallai_complex(prism_graph(n)));
    families.emplace_back("friendship anti-gallai n=" + str(n),
                          anti_gallai_complex(friendship_graph(n)));
  }
  for (int n = 3; n <= 12; ++n) {
    families.emplace_back("wheel line n=" + str(n), line_complex(wheel_graph(n)));
    families.emplace_back("wheel anti-gallai n=" + str(n),
                          anti_gallai_complex(wheel_graph(n)));
  }
  families.emplace_back("cycle line n=5", line_complex(cycle_graph(5)));
  for (const auto& [name, c] : families) {
    if (c.facet_count() > 15) continue;
    r.rows.push_back(row(name, "agree", methods_agree(c) ? "agree" : "DISAGREE"));
  }
  return r;
}

SuiteResult triangle_free(std::optional<int> max_n) {
  SuiteResult r{"triangle-free", {}};
  Tally tally;
  for_each_corpus_graph(bound(max_n, 6, 1, kMaxEnumerationVertices), 0,
                        [&](int n, const SimpleGraph& g) {
                          if (!triangles(g).empty()) return;
                          tally.add(n, line_complex(g) == gallai_complex(g) &&
                                           anti_gallai_indices(g).size() == 0);
                        });
  tally.emit(r, "triangle-free graphs");
  std::vector<std::pair<std::string, SimpleGraph>> named;
  for (int n = 4; n <= 8; ++n) named.emplace_back("cycle " + str(n), cycle_graph(n));
  for (int n = 2; n <= 8; ++n) named.emplace_back("path " + str(n), path_graph(n));
  for (int k = 1; k <= 8; ++k) named.emplace_back("star " + str(k), star_graph(k));
  for (const auto& [name, g] : named) {
    const bool ok = line_complex(g) == gallai_complex(g) &&
                    anti_gallai_indices(g).size() == 0;
    r.rows.push_back(row(name, "line=gallai, no anti-gallai",
                         ok ? "line=gallai, no anti-gallai" : "differs"));
  }
  for (int n = 2; n <= 8; ++n) {
    const bool same =
        line_complex(friendship_graph(n)) == line_complex(star_graph(2 * n));
    r.rows.push_back(row("friendship " + str(n) + " vs star " + str(2 * n),
                         "equal", same ? "equal" : "differs"));
  }
  return r;
}

SuiteResult excision(std::optional<int> max_n) {
  SuiteResult r{"excision", {}};
  Tally additive;
  Tally components;
  for_each_corpus_graph(
      bound(max_n, 5, 1, kMaxEnumerationVertices), 0,
      [&](int n, const SimpleGraph& g) {
        for (ComplexKind kind : kAllKinds) {
          const SimplicialComplex c = complex_of(g, kind);
          if (c.is_void()) continue;
          std::int64_t sum = 0;
          for (const auto& part : connected_components(c)) {
            sum += euler_characteristic(part);
          }
          additive.add(n, sum == euler_characteristic(c));
        }
        if (g.min_degree() >= 1) {
          components.add(n, connected_components(line_complex(g)).size() ==
                                connected_component_count(g));
        }
      });
  additive.emit(r, "complexes additive");
  components.emit(r, "graphs with matching component counts");
  return r;
}

SuiteResult f_vector_oracle(std::optional<int> max_n) {
  SuiteResult r{"f-vector-oracle", {}};
  Tally tally;
  for_each_corpus_graph(bound(max_n, 5, 1, kMaxEnumerationVertices), 0,
                        [&](int n, const SimpleGraph& g) {
                          for (ComplexKind kind : kAllKinds) {
                            const SimplicialComplex c = complex_of(g, kind);
                            if (c.is_void()) continue;
                            tally.add(n, f_vector(c) == brute_force_f_vector(c));
                          }
                        });
  tally.emit(r, "complexes");
  return r;
}

using SuiteFn = SuiteResult (*)(std::optional<int>);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"wheel-euler", wheel_euler},
      {"wheel-decomposition", wheel_decomposition},
      {"friendship", friendship},
      {"worked-example", worked_example},
      {"euler-decomposition-exhaustive", euler_decomposition_exhaustive},
      {"connectivity-exhaustive", connectivity_exhaustive},
      {"shellability", shellability},
      {"oracle-equivalence", oracle_equivalence},
      {"triangle-free", triangle_free},
      {"excision", excision},
      {"f-vector-oracle", f_vector_oracle},
  };
  return suites;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SuiteRow& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::optional<std::string> canonical_suite_name(std::string_view name) {
  for (const auto& known : suite_names()) {
    if (known == name) return known;
  }
  return std::nullopt;
}

SuiteResult run_suite(std::string_view name, std::optional<int> max_n) {
  const auto canonical = canonical_suite_name(name);
  if (!canonical) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  for (const auto& [known, fn] : registry()) {
    if (known == *canonical) return fn(max_n);
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Json suite_to_json(const SuiteResult& result) {
  Json rows = Json::array();
  for (const SuiteRow& r : result.rows) {
    Json row;
    row["item"] = r.item;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["status"] = r.pass ? "PASS" : "FAIL";
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["suite"] = result.name;
  doc["status"] = result.passed() ? "PASS" : "FAIL";
  doc["rows"] = std::move(rows);
  return doc;
}

std::string suite_to_text(const SuiteResult& result) {
  std::ostringstream out;
  out << "== " << result.name << " ("
      << (result.passed() ? "PASS" : "FAIL") << ")\n";
  for (const SuiteRow& r : result.rows) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.item << " | expected "
        << r.expected << " | computed " << r.computed << '\n';
  }
  return out.str();
}

}  // namespace simplicial_lines::cli
