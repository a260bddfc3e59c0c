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

#ifndef CDES_BIJECTIONS_HPP
#define CDES_BIJECTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdes/matching.hpp"
#include "cdes/permutation.hpp"

namespace cdes {

// Negative cycle descent permutations and their Callan matchings.

struct SignedPermutation {
  Permutation perm;
  std::vector<int> neg;  // values signed -1, ascending

  int size() const { return perm.size(); }
  bool is_negative(int value) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Sorts and validates neg against 1..n; throws std::invalid_argument.
SignedPermutation make_signed(Permutation perm, std::vector<int> neg);

/// neg is a subset of CDES(perm).
bool is_negative_cdes(const SignedPermutation& sp);

enum class SignedFilter { all, derangement };

inline constexpr int kSignedEnumMaxN = 7;

/// Every (pi, S) with S a subset of CDES(pi): permutations in lexicographic
/// order, subsets by ascending bitmask over the sorted CDES. n <= 7.
void for_each_negative_cdes(int n, SignedFilter filter,
                            const std::function<void(const SignedPermutation&)>& visit);
std::vector<SignedPermutation> enumerate_negative_cdes(int n, SignedFilter filter);

/// Blocks of one cycle: a bar after each positive element, each block
/// stored decreasing. `cycle` starts at its minimum.
using BlockSeq = std::vector<std::vector<int>>;
BlockSeq blocks(const std::vector<int>& cycle, const std::vector<int>& neg);

/// Cyclic negative cycle descent permutation of 1..l to a connected Callan
/// matching of P_l.
PerfectMatching theta(const SignedPermutation& sp);

/// Inverse of theta; requires a connected Callan matching with support 1..l.
SignedPermutation theta_inv(const PerfectMatching& m);

/// Per-cycle theta, relabelled back and united.
PerfectMatching gamma(const SignedPermutation& sp);

/// Inverse of gamma through the connected components.
SignedPermutation gamma_inv(const PerfectMatching& m);

/// For cyclic sp: down(theta(sp)) - neg(sp), expected in {0, 1} and equal
/// to 1 exactly when the edge at (1,1) is a downline.
struct DownlineCheck {
  int down = 0;
  int neg = 0;
  bool closing_is_downline = false;
  bool holds() const { return down - neg == (closing_is_downline ? 1 : 0); }
};
DownlineCheck downline_check(const SignedPermutation& cyclic);

/// Tally of the statement "down = neg if (1,1) and its partner share a row,
/// neg + 1 otherwise" over all negative cycle descent permutations of n.
struct GlobalDownlineReport {
  int n = 0;
  long long total = 0;
  long long holds = 0;
  long long cyclic_total = 0;
  long long cyclic_holds = 0;
  long long holds_vertical_as_same_row = 0;
  std::optional<SignedPermutation> first_counterexample;
};
/// `vertical_as_same_row` selects how a vertical edge at (1,1) is read.
bool global_downline_statement(const SignedPermutation& sp, bool vertical_as_same_row = false);
GlobalDownlineReport global_downline_report(int n);

}  // namespace cdes

#endif  // CDES_BIJECTIONS_HPP
