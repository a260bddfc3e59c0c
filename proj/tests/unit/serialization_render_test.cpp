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

#include "cdes/render.hpp"
#include "cdes/serialization.hpp"
#include "test_fixtures.hpp"

namespace cdes {
namespace {

int count(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

TEST(MatchingJson, RoundTrip) {
  const PerfectMatching m = fixtures::three_components();
  const Json j = matching_to_json(m);
  EXPECT_EQ(j["support"].size(), 8u);
  EXPECT_EQ(j["edges"][0], Json::parse("[[1,0],[3,0]]"));
  EXPECT_EQ(matching_from_json(j), m);
  EXPECT_EQ(matching_from_json(Json::parse(j.dump())), m);
}

TEST(MatchingJson, Errors) {
  EXPECT_THROW(matching_from_json(Json::parse(R"({"support":[1]})")), ParseError);
  EXPECT_THROW(matching_from_json(Json::parse(R"({"support":[1],"edges":[[[1,0],[1,2]]]})")),
               ParseError);
  EXPECT_THROW(matching_from_json(Json::parse(R"({"support":[1,2],"edges":[[[1,0],[1,1]]]})")),
               std::invalid_argument);
}

TEST(SignedText, ParseAndFormat) {
  const SignedPermutation sp = parse_signed_cycles("(1+ 6- 3+ 4+)(2+ 8- 7+)(5+)");
  EXPECT_EQ(sp.perm, parse_permutation("(1 6 3 4)(2 8 7)(5)"));
  EXPECT_EQ(sp.neg, (std::vector<int>{6, 8}));
  EXPECT_EQ(format_signed_cycles(sp), "(1+ 6- 3+ 4+)(2+ 8- 7+)(5+)");
  EXPECT_EQ(parse_signed_cycles("(1 3-2)"), make_signed(parse_permutation("(1 3 2)"), {3}));
  EXPECT_EQ(parse_signed_cycles("(1+)", 3).size(), 3);
  EXPECT_THROW(parse_signed_cycles("(1 - 2)"), ParseError);
  EXPECT_THROW(parse_signed_cycles("1 2"), ParseError);
  EXPECT_FALSE(is_negative_cdes(parse_signed_cycles("(1 2-)")));
}

TEST(SignedJson, RoundTrip) {
  const SignedPermutation sp = parse_signed_cycles("(1+ 6- 4- 3+ 2+ 8- 7- 5+)");
  const Json j = signed_to_json(sp);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["neg"], Json::parse("[4,6,7,8]"));
  EXPECT_EQ(signed_from_json(j), sp);
  EXPECT_THROW(signed_from_json(Json::parse(R"({"n":2,"one_line":[1],"neg":[]})")), ParseError);
}

TEST(StatsJson, Example) {
  const Json j = stats_to_json(parse_permutation("2 4 1 3"));
  EXPECT_EQ(j["exc"], 2);
  EXPECT_EQ(j["cyc"], 1);
}

TEST(RenderSvg, ThreeComponents) {
  const Diagram d = render_svg(fixtures::three_components());
  EXPECT_FALSE(d.warning);
  EXPECT_EQ(count(d.document, "class=\"component\""), 3);
  EXPECT_EQ(count(d.document, "edge vertical"), 1);
  EXPECT_EQ(count(d.document, "edge downline"), 3);
  EXPECT_EQ(count(d.document, "edge arc"), 4);
  EXPECT_EQ(count(d.document, "<circle"), 16);
  EXPECT_NE(d.document.find("data-callan=\"true\""), std::string::npos);
}

TEST(RenderSvg, WarnsOnUplines) {
  const Diagram d = render_svg(fixtures::three_uplines());
  EXPECT_TRUE(d.warning);
  EXPECT_EQ(count(d.document, "edge upline"), 3);
  EXPECT_NE(d.document.find("data-warning=\"uplines\""), std::string::npos);
}

TEST(RenderText, ListsEdgesByClass) {
  const Diagram d = render_text(fixtures::connected_cycle());
  EXPECT_FALSE(d.warning);
  EXPECT_NE(d.document.find("{(1,1),(8,1)}"), std::string::npos);
  EXPECT_NE(d.document.find("com=1"), std::string::npos);
  EXPECT_TRUE(render_text(fixtures::three_uplines()).warning);
}

}  // namespace
}  // namespace cdes
