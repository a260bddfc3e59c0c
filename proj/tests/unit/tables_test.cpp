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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cdes/tables.hpp"

#ifndef CDES_GOLDEN_DIR
#error "CDES_GOLDEN_DIR must be defined"
#endif

namespace cdes {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CDES_GOLDEN_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class PsiGolden : public ::testing::TestWithParam<int> {};

TEST_P(PsiGolden, MatchesTranscription) {
  const int i = GetParam();
  const std::string golden = read_golden("psi_4_" + std::to_string(i) + ".txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(emit_table(TableKind::psi, 4, i), strip_comment_lines(golden));
}

INSTANTIATE_TEST_SUITE_P(N4, PsiGolden, ::testing::Values(1, 2, 3, 4));

TEST(VarphiGolden, MatchesTranscription) {
  const std::string golden = read_golden("varphi_4.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(emit_table(TableKind::varphi, 4, std::nullopt), strip_comment_lines(golden));
}

TEST(Tables, RowCounts) {
  // One row per member of S_{n,i}.
  for (int n = 2; n <= 6; ++n) {
    int fact = 1;
    for (int k = 2; k < n; ++k) fact *= k;
    for (int i = 1; i <= n; ++i) {
      const std::string t = emit_table(TableKind::psi, n, i);
      EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), fact);
    }
  }
}

TEST(Tables, Errors) {
  EXPECT_THROW(emit_table(TableKind::psi, 4, std::nullopt), std::out_of_range);
  EXPECT_THROW(emit_table(TableKind::psi, 4, 5), std::out_of_range);
  EXPECT_THROW(emit_table(TableKind::psi, 9, 1), std::out_of_range);
  EXPECT_THROW(emit_table(TableKind::varphi, 4, 1), std::out_of_range);
  EXPECT_EQ(table_kind_from_string("varphi"), TableKind::varphi);
  EXPECT_EQ(table_kind_from_string("phi"), std::nullopt);
}

TEST(Tables, StripCommentLines) {
  EXPECT_EQ(strip_comment_lines("# note\na|b\n#x\nc\n"), "a|b\nc\n");
}

}  // namespace
}  // namespace cdes
