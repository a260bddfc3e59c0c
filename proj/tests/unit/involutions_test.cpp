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

#include "cdes/involutions.hpp"
#include "cdes/statistics_engine.hpp"

namespace cdes {
namespace {

Permutation P(const char* text, int n) { return parse_permutation(text, n); }

TEST(LastTopDescent, Examples) {
  EXPECT_EQ(last_top_descent(P("(1)(2 4)(3 7 5)(6)", 7)), 7);
  EXPECT_EQ(last_top_descent(Permutation::identity(5)), std::nullopt);
  EXPECT_EQ(last_top_descent(P("(1)(2 4 3)", 4)), 4);
}

TEST(PhiMap, SplitAndMerge) {
  const InvolutionOutcome split = phi_map(P("(1)(2 4)(3 7 5)(6)", 7));
  EXPECT_EQ(split.image, P("(1)(2 4)(3 7)(5)(6)", 7));
  EXPECT_EQ(split.branch, Branch::phi_split);
  const InvolutionOutcome merge = phi_map(P("(1)(2 4)(3 7)(5)(6)", 7));
  EXPECT_EQ(merge.image, P("(1)(2 4)(3 7 5)(6)", 7));
  EXPECT_EQ(merge.branch, Branch::phi_merge);
  EXPECT_EQ(phi_map(P("(1)(2 4 3)", 4)).image, P("(1)(2 4)(3)", 4));
  EXPECT_THROW(phi_map(Permutation::identity(3)), std::domain_error);
}

TEST(MIndex, Examples) {
  EXPECT_EQ(m_index(P("(1 2)(3 4)", 4)), 1);
  EXPECT_EQ(m_index(P("(1 3 4 2)", 4)), 3);
  EXPECT_EQ(m_index(P("(1 2 3 4)", 4)), std::nullopt);
  EXPECT_EQ(m_index(Permutation::identity(3)), std::nullopt);
}

TEST(Psi, TableExamples) {
  const InvolutionOutcome a = psi(4, 2, P("(1 2)(3)(4)", 4));
  EXPECT_EQ(a.image, P("(1 4 2)(3)", 4));
  EXPECT_EQ(a.branch, Branch::psi_case2);
  EXPECT_EQ(psi(4, 2, a.image).branch, Branch::psi_case1);
  EXPECT_EQ(psi(4, 3, P("(1 4 2 3)", 4)).image, P("(1 2 3)(4)", 4));
  EXPECT_EQ(psi(4, 4, P("(1 2 4)(3)", 4)).image, P("(1 3 2 4)", 4));
  EXPECT_EQ(psi(4, 1, P("(1)(2 4)(3)", 4)).image, P("(1)(2 4 3)", 4));
  EXPECT_EQ(psi(4, 4, P("(1 2 3 4)", 4)).branch, Branch::fixed);
}

TEST(Psi, RejectsOutsideDomain) {
  EXPECT_THROW(psi(4, 2, Permutation::identity(4)), std::invalid_argument);
  EXPECT_THROW(psi(1, 1, Permutation::identity(1)), std::invalid_argument);
  EXPECT_THROW(psi(3, 2, Permutation::identity(4)), std::invalid_argument);
}

TEST(PsiFixedSet, Examples) {
  EXPECT_EQ(psi_fixed_set(4, 1),
            (std::vector<Permutation>{P("(1)(2)(3)(4)", 4), P("(1)(2)(3 4)", 4),
                                      P("(1)(2 3)(4)", 4), P("(1)(2 3 4)", 4)}));
  EXPECT_TRUE(psi_fixed_set(4, 2).empty());
  std::vector<Permutation> last = {P("(1 4)(2)(3)", 4), P("(1 4)(2 3)", 4), P("(1 3 4)(2)", 4),
                                   P("(1 2 3 4)", 4)};
  std::sort(last.begin(), last.end());
  EXPECT_EQ(psi_fixed_set(4, 4), last);
}

MultiPoly signed_weight(const Permutation& p) {
  const StatRecord s = statistics(p);
  return MultiPoly::monomial(s.cdes % 2 == 0 ? 1 : -1, s.exc);
}

TEST(PsiProperties, ExhaustiveThroughSeven) {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::vector<Permutation> fixed;
      MultiPoly total;
      for (const Permutation& pi : enumerate(Family::one_at_i, n, i)) {
        const InvolutionOutcome out = psi(n, i, pi);
        ASSERT_EQ(out.image(i), 1);
        ASSERT_EQ(psi(n, i, out.image).image, pi) << format_cycles(pi);
        ASSERT_EQ(statistics(out.image).exc, statistics(pi).exc);
        if (out.image == pi) {
          fixed.push_back(pi);
          ASSERT_EQ(out.delta_cdes, 0);
        } else {
          ASSERT_EQ(std::abs(out.delta_cdes), 1);
        }
        total += signed_weight(pi);
      }
      ASSERT_EQ(fixed, psi_fixed_set(n, i));
      ASSERT_EQ(total, closed_form(ClosedFormVariant::q1, n, i)
                           .eval_partial(Bindings().set(Var::t, 1)));
    }
  }
}

TEST(PhiProperties, PreservesHatAndQ) {
  for (int n = 2; n <= 7; ++n) {
    for (const Permutation& pi : enumerate(Family::all, n)) {
      if (!last_top_descent(pi)) continue;
      const InvolutionOutcome out = phi_map(pi);
      ASSERT_EQ(hat(out.image), hat(pi));
      ASSERT_EQ(last_top_descent(out.image), last_top_descent(pi));
      ASSERT_EQ(phi_map(out.image).image, pi);
      ASSERT_NE(out.branch, phi_map(out.image).branch);
    }
  }
}

TEST(Varphi, TableExamples) {
  EXPECT_EQ(varphi(4, 2, P("(1 2)(3 4)", 4)).image, P("(1 3 4 2)", 4));
  EXPECT_EQ(varphi(4, 2, P("(1 4 3 2)", 4)).branch, Branch::fixed);
  EXPECT_EQ(varphi(4, 4, P("(1 3 2 4)", 4)).image, P("(1 4)(2 3)", 4));
  EXPECT_EQ(varphi(4, 3, P("(1 3)(2 4)", 4)).image, P("(1 4 2 3)", 4));
  EXPECT_EQ(varphi(4, 3, P("(1 2 4 3)", 4)).branch, Branch::fixed);
  EXPECT_EQ(sigma_fixed_point(4, 3), P("(1 2 4 3)", 4));
}

TEST(Varphi, RejectsOutsideDomain) {
  EXPECT_THROW(varphi(4, 2, P("(1 2)(3)(4)", 4)), std::invalid_argument);
  EXPECT_THROW(varphi(4, 3, P("(1 2)(3 4)", 4)), std::invalid_argument);
  EXPECT_THROW(varphi(4, 1, P("(1 2)(3 4)", 4)), std::out_of_range);
}

TEST(VarphiProperties, ExhaustiveThroughEight) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 2; i <= n; ++i) {
      int fixed = 0;
      MultiPoly total;
      for_each_permutation(Family::derangements_one_at_i, n, i, [&](std::span<const int> w) {
        const Permutation pi(std::vector<int>(w.begin(), w.end()));
        const InvolutionOutcome out = varphi(n, i, pi);
        ASSERT_TRUE(out.image.is_derangement());
        ASSERT_EQ(out.image(i), 1);
        const InvolutionOutcome back = varphi(n, i, out.image);
        ASSERT_EQ(back.image, pi) << format_cycles(pi);
        ASSERT_EQ(statistics(out.image).exc, statistics(pi).exc);
        if (out.image == pi) {
          ++fixed;
          ASSERT_EQ(pi, sigma_fixed_point(n, i));
        } else {
          ASSERT_EQ(std::abs(out.delta_cdes), 1);
          ASSERT_TRUE((out.branch == Branch::varphi_case2 && back.branch == Branch::varphi_case3) ||
                      (out.branch == Branch::varphi_case3 && back.branch == Branch::varphi_case2));
        }
        total += signed_weight(pi);
      });
      ASSERT_EQ(fixed, 1);
      ASSERT_EQ(total, closed_form(ClosedFormVariant::q0, n, i)
                           .eval_partial(Bindings().set(Var::t, 1)));
    }
  }
}

}  // namespace
}  // namespace cdes
