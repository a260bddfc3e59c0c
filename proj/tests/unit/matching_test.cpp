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

#include <gtest/gtest.h>

#include <set>

#include "cdes/matching.hpp"
#include "cdes/statistics_engine.hpp"
#include "test_fixtures.hpp"

namespace cdes {
namespace {

TEST(MkMatching, Validation) {
  EXPECT_NO_THROW(mk_matching(1, {Edge::make({1, 0}, {1, 1})}));
  EXPECT_NO_THROW(fixtures::three_uplines());
  EXPECT_THROW(mk_matching(2, {Edge::make({1, 0}, {1, 1})}), std::invalid_argument);
  EXPECT_THROW(mk_matching(1, {Edge::make({1, 0}, {2, 1})}), std::invalid_argument);
  EXPECT_THROW(mk_matching(1, {Edge::make({1, 0}, {1, 1}), Edge::make({1, 0}, {1, 1})}),
               std::invalid_argument);
  EXPECT_THROW(mk_matching(1, {Edge::make({1, 0}, {1, 0})}), std::invalid_argument);
}

TEST(MkMatching, CanonicalOrder) {
  const PerfectMatching a = mk_matching(2, {{{2, 1}, {1, 1}}, {{2, 0}, {1, 0}}});
  const PerfectMatching b = mk_matching(2, {{{1, 0}, {2, 0}}, {{1, 1}, {2, 1}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edges().front(), Edge::make({1, 0}, {2, 0}));
}

TEST(EdgeClass, Examples) {
  EXPECT_EQ(edge_class(Edge::make({1, 1}, {1, 0})), EdgeClass::vertical);
  EXPECT_EQ(edge_class(Edge::make({3, 1}, {6, 0})), EdgeClass::downline);
  EXPECT_EQ(edge_class(Edge::make({2, 1}, {4, 1})), EdgeClass::arc);
  EXPECT_EQ(edge_class(Edge::make({2, 0}, {5, 1})), EdgeClass::upline);
}

TEST(MatchStats, Examples) {
  const MatchStats s1 = match_stats(fixtures::three_uplines());
  EXPECT_EQ(s1.arc, 2);
  EXPECT_EQ(s1.down, 2);
  EXPECT_EQ(s1.ver, 1);
  EXPECT_EQ(s1.up, 3);
  EXPECT_FALSE(is_callan(fixtures::three_uplines()));

  const MatchStats s2 = match_stats(fixtures::three_components());
  EXPECT_EQ(s2.com, 3);
  EXPECT_EQ(s2.down, 3);
  EXPECT_EQ(s2.ver, 1);
  EXPECT_TRUE(is_callan(fixtures::three_components()));

  const MatchStats v = match_stats(fixtures::all_vertical(5));
  EXPECT_EQ(v.ver, 5);
  EXPECT_EQ(v.com, 5);
  EXPECT_TRUE(is_callan(fixtures::all_vertical(5)));
}

TEST(Components, ThreeComponents) {
  const std::vector<PerfectMatching> comps = components(fixtures::three_components());
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].support(), (std::vector<int>{1, 3, 4, 6}));
  EXPECT_EQ(comps[1].support(), (std::vector<int>{2, 7, 8}));
  EXPECT_EQ(comps[2].support(), (std::vector<int>{5}));
  EXPECT_EQ(components(fixtures::all_vertical(1)).size(), 1u);
  EXPECT_EQ(components(mk_matching(2, {{{1, 0}, {2, 0}}, {{1, 1}, {2, 1}}})).size(), 1u);
}

TEST(Components, PartitionAndAdditivity) {
  for (int n = 1; n <= 6; ++n) {
    for_each_matching(n, MatchingFilter::all, [&](const PerfectMatching& m) {
      const MatchStats whole = match_stats(m);
      MatchStats sum;
      std::vector<int> support;
      for (const PerfectMatching& c : components(m)) {
        const MatchStats s = match_stats(c);
        ASSERT_EQ(s.com, 1);
        sum.arc += s.arc;
        sum.up += s.up;
        sum.down += s.down;
        sum.ver += s.ver;
        ++sum.com;
        support.insert(support.end(), c.support().begin(), c.support().end());
      }
      std::sort(support.begin(), support.end());
      ASSERT_EQ(support, m.support());
      ASSERT_EQ(sum, whole);
      ASSERT_EQ(whole.arc + whole.up + whole.down + whole.ver, n);
    });
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_matchings(2, MatchingFilter::all).size(), 3u);
  EXPECT_EQ(count_matchings(3, MatchingFilter::callan), 7);
  EXPECT_EQ(count_matchings(3, MatchingFilter::callan_no_vertical), 3);
  const std::vector<long long> all = {1, 3, 15, 105, 945, 10395, 135135};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(count_matchings(n, MatchingFilter::all), all[n - 1]);
    EXPECT_EQ(BigInt(count_matchings(n, MatchingFilter::callan)), klazar_count(n));
    EXPECT_EQ(BigInt(count_matchings(n, MatchingFilter::callan_no_vertical)),
              derangement_counts(n)[n - 1]);
  }
  EXPECT_THROW(count_matchings(9, MatchingFilter::all), std::out_of_range);
}

TEST(Enumerate, DistinctSortedAndFiltered) {
  const std::vector<PerfectMatching> ms = enumerate_matchings(5, MatchingFilter::callan);
  EXPECT_EQ(std::set<PerfectMatching>(ms.begin(), ms.end()).size(), ms.size());
  for (const PerfectMatching& m : ms) EXPECT_TRUE(is_callan(m));
  long long filtered = 0;
  for_each_matching(5, MatchingFilter::all, [&](const PerfectMatching& m) {
    if (is_callan(m) && match_stats(m).ver == 0) ++filtered;
  });
  EXPECT_EQ(filtered, count_matchings(5, MatchingFilter::callan_no_vertical));
}

}  // namespace
}  // namespace cdes
