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

#include <benchmark/benchmark.h>

#include "simplicial_lines/complex.hpp"
#include "simplicial_lines/families.hpp"
#include "simplicial_lines/orderings.hpp"
#include "simplicial_lines/shelling.hpp"

namespace sl = simplicial_lines;

namespace {

sl::ShellingMethod method_of(const benchmark::State& state) {
  return state.range(1) == 0 ? sl::ShellingMethod::kDefinition
                             : sl::ShellingMethod::kResiduals;
}

// Shellable case: the search should find a witness quickly.
void BM_SearchFriendshipLine(benchmark::State& state) {
  const auto c = sl::line_complex(
      sl::friendship_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::find_shelling_order(
        c, method_of(state), sl::SearchOptions{sl::kHardMaxFacets}));
  }
  state.counters["facets"] = static_cast<double>(c.facet_count());
}
BENCHMARK(BM_SearchFriendshipLine)
    ->ArgsProduct({{2, 3, 4, 5}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

// Refutation case: the whole predecessor-set space is exhausted.
void BM_RefutePrismAntiGallai(benchmark::State& state) {
  const auto c = sl::anti_gallai_complex(
      sl::prism_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::find_shelling_order(c, method_of(state)));
  }
}
BENCHMARK(BM_RefutePrismAntiGallai)
    ->ArgsProduct({{4, 8, 12}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_RefuteCycleLine(benchmark::State& state) {
  const auto c = sl::line_complex(sl::cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::find_shelling_order(c, method_of(state)));
  }
  state.counters["facets"] = static_cast<double>(c.facet_count());
}
BENCHMARK(BM_RefuteCycleLine)
    ->ArgsProduct({{5, 8, 12, 16}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_VerifyWheelOrdering(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = sl::line_complex(sl::wheel_graph(n));
  const auto order = sl::ordering_from_facets(c, sl::wheel_line_ordering(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::verify_ordering(c, order, method_of(state)));
  }
  state.counters["facets"] = static_cast<double>(c.facet_count());
}
BENCHMARK(BM_VerifyWheelOrdering)
    ->ArgsProduct({{8, 16, 32}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_GreedyWheelLine(benchmark::State& state) {
  const auto c = sl::line_complex(sl::wheel_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sl::greedy_shelling_order(c, sl::ShellingMethod::kDefinition));
  }
}
BENCHMARK(BM_GreedyWheelLine)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
