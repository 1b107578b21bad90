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

#include "simplicial_lines/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "simplicial_lines/error.hpp"

namespace simplicial_lines {

namespace {

// Subset expansion is exponential in facet size; graph complexes never go
// beyond three vertices per facet.
constexpr std::size_t kMaxExpandableFacet = 24;

void require_non_void(const SimplicialComplex& complex, const char* op) {
  if (complex.is_void()) {
    throw ComplexError(std::string(op) + " is undefined for the void complex");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(
    std::span<const Face> generators) {
  std::vector<Face> sorted(generators.begin(), generators.end());
  for (const Face& g : sorted) {
    if (g.empty()) throw ComplexError("generators must be non-empty sets");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A generator is dropped when a strictly larger one contains it. Only
  // generators through its rarest vertex need checking.
  std::map<Vertex, std::vector<std::size_t>> containing;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (Vertex v : sorted[i]) containing[v].push_back(i);
  }
  SimplicialComplex out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::vector<std::size_t>* candidates = nullptr;
    for (Vertex v : sorted[i]) {
      const auto& list = containing.at(v);
      if (!candidates || list.size() < candidates->size()) candidates = &list;
    }
    const bool maximal = std::none_of(
        candidates->begin(), candidates->end(), [&](std::size_t j) {
          return sorted[i].size() < sorted[j].size() &&
                 sorted[i].is_subset_of(sorted[j]);
        });
    if (maximal) out.facets_.push_back(sorted[i]);
  }
  std::set<Vertex> vertices;
  for (const Face& g : sorted) vertices.insert(g.begin(), g.end());
  out.vertices_.assign(vertices.begin(), vertices.end());
  return out;
}

bool SimplicialComplex::contains_face(const Face& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return face.is_subset_of(f);
  });
}

SimplicialComplex complex_from_generators(std::span<const Face> generators) {
  return SimplicialComplex::from_generators(generators);
}

SimplicialComplex complex_of(const SimpleGraph& g, ComplexKind kind) {
  return complex_from_generators(indices_of(g, kind).members);
}

SimplicialComplex line_complex(const SimpleGraph& g) {
  return complex_of(g, ComplexKind::kLine);
}

SimplicialComplex gallai_complex(const SimpleGraph& g) {
  return complex_of(g, ComplexKind::kGallai);
}

SimplicialComplex anti_gallai_complex(const SimpleGraph& g) {
  return complex_of(g, ComplexKind::kAntiGallai);
}

FVector f_vector(const SimplicialComplex& complex) {
  require_non_void(complex, "f-vector");
  std::set<Face> faces;
  for (const Face& facet : complex.facets()) {
    if (facet.size() > kMaxExpandableFacet) {
      throw ComplexError("facet " + facet.to_string() +
                         " is too large for face enumeration");
    }
    const std::uint32_t subsets = 1u << facet.size();
    std::vector<Vertex> buffer;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      buffer.clear();
      for (std::size_t i = 0; i < facet.size(); ++i) {
        if (mask & (1u << i)) buffer.push_back(facet[i]);
      }
      faces.insert(Face(buffer));
    }
  }
  FVector f;
  f.counts.assign(static_cast<std::size_t>(dimension(complex)) + 1, 0);
  for (const Face& face : faces) ++f.counts[face.size() - 1];
  return f;
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * f.counts[k];
  }
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  return euler_characteristic(f_vector(complex));
}

int dimension(const SimplicialComplex& complex) {
  require_non_void(complex, "dimension");
  std::size_t largest = 0;
  for (const Face& f : complex.facets()) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool is_pure(const SimplicialComplex& complex) {
  require_non_void(complex, "purity");
  const std::size_t size = complex.facets().front().size();
  return std::all_of(complex.facets().begin(), complex.facets().end(),
                     [&](const Face& f) { return f.size() == size; });
}

std::vector<SimplicialComplex> connected_components(
    const SimplicialComplex& complex) {
  require_non_void(complex, "connected components");
  const auto& facets = complex.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  // Join every facet to the first facet seen at each of its vertices.
  std::map<Vertex, std::size_t> first_owner;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (Vertex v : facets[i]) {
      auto [it, inserted] = first_owner.emplace(v, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<Face>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    groups[find(i)].push_back(facets[i]);
  }
  std::vector<SimplicialComplex> out;
  for (auto& [root, members] : groups) {
    out.push_back(SimplicialComplex::from_generators(members));
  }
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) {
              return a.vertices().front() < b.vertices().front();
            });
  return out;
}

bool is_connected_complex(const SimplicialComplex& complex) {
  return connected_components(complex).size() == 1;
}

bool is_subcomplex(const SimplicialComplex& sub,
                   const SimplicialComplex& whole) {
  return std::all_of(sub.facets().begin(), sub.facets().end(),
                     [&](const Face& f) { return whole.contains_face(f); });
}

bool is_spanning_subcomplex(const SimplicialComplex& sub,
                            const SimplicialComplex& whole) {
  return sub.vertices() == whole.vertices() && is_subcomplex(sub, whole);
}

}  // namespace simplicial_lines
