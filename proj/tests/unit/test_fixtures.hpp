// Copyright 2026 The cdes Authors
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

#ifndef CDES_TESTS_TEST_FIXTURES_HPP
#define CDES_TESTS_TEST_FIXTURES_HPP

#include "cdes/matching.hpp"

namespace cdes::fixtures {

// Dot diagram with three uplines.
inline PerfectMatching three_uplines() {
  return mk_matching(8, {Edge::make({1, 1}, {1, 0}), Edge::make({3, 1}, {6, 0}),
                         Edge::make({6, 1}, {8, 0}), Edge::make({5, 1}, {2, 0}),
                         Edge::make({7, 1}, {5, 0}), Edge::make({8, 1}, {4, 0}),
                         Edge::make({2, 1}, {4, 1}), Edge::make({3, 0}, {7, 0})});
}

// Callan matching with three components; the image of (1+6-3+4+)(2+8-7+)(5+).
inline PerfectMatching three_components() {
  return mk_matching(8, {Edge::make({1, 0}, {3, 0}), Edge::make({1, 1}, {4, 0}),
                         Edge::make({3, 1}, {6, 0}), Edge::make({4, 1}, {6, 1}),
                         Edge::make({2, 0}, {7, 0}), Edge::make({2, 1}, {8, 1}),
                         Edge::make({7, 1}, {8, 0}), Edge::make({5, 0}, {5, 1})});
}

// Connected Callan matching of (1+6-4-3+2+8-7-5+).
inline PerfectMatching connected_cycle() {
  return mk_matching(8, {Edge::make({6, 0}, {4, 1}), Edge::make({4, 0}, {3, 1}),
                         Edge::make({8, 0}, {7, 1}), Edge::make({7, 0}, {5, 1}),
                         Edge::make({1, 0}, {3, 0}), Edge::make({6, 1}, {2, 1}),
                         Edge::make({2, 0}, {5, 0}), Edge::make({1, 1}, {8, 1})});
}

inline PerfectMatching all_vertical(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back(Edge::make({i, 0}, {i, 1}));
  return mk_matching(n, std::move(edges));
}

}  // namespace cdes::fixtures

#endif  // CDES_TESTS_TEST_FIXTURES_HPP
