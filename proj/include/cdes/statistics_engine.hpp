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

#ifndef CDES_STATISTICS_ENGINE_HPP
#define CDES_STATISTICS_ENGINE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdes/permutation.hpp"
#include "cdes/polynomial.hpp"

namespace cdes {

// Generating polynomials of the statistic tuple (exc, cdes, fix, pi^{-1}(1))
// over permutations with pi(i) = 1:
//
//   P_{n,i}(x, y, q, t) = sum x^exc y^cdes q^fix t^{pi^{-1}(1)}
//
// computed both by exhaustive enumeration and by the deletion recurrences,
// together with the totals b_n(y, q) and a battery of signed identities.

inline constexpr int kBruteForceMaxN = 9;
inline constexpr int kRecurrenceMaxN = 64;

enum class PMode { all, derangement };

/// P_{n,i} for i = 1..n. In derangement mode the i = 1 entry is zero for
/// n >= 2.
struct PolyTable {
  int n = 0;
  std::vector<MultiPoly> entries;  // entries[i - 1]

  const MultiPoly& at(int i) const;
  MultiPoly total() const;
  friend bool operator==(const PolyTable&, const PolyTable&) = default;
};

/// Exhaustive P_{n,i}; every term carries t^i. Requires 1 <= i <= n <= 9.
MultiPoly p_brute(int n, int i, PMode mode);

/// All of P_{n,1..n} from one pass over S_n (or D_n), bucketed by the
/// position of 1.
PolyTable p_brute_table(int n, PMode mode);

/// P_{n,i}(x, y, 1, 1) from the q = 1 recurrence. Requires 1 <= n <= 64.
PolyTable p_rec_q1(int n);

/// P_{n,i}(x, y, 0, 1) from the derangement recurrence, seeded with the
/// empty derangement P_0 = 1 and P_1 = 0. Requires 2 <= n <= 64.
PolyTable p_rec_q0(int n);

enum class ClosedFormVariant { q1, q0 };

/// Closed forms at y = -1: q1 gives P_{n,i}(x,-1,1,t), q0 gives
/// P_{n,i}(x,-1,0,t). Requires n >= 2; q0 rejects i = 1.
MultiPoly closed_form(ClosedFormVariant variant, int n, int i);

enum class BVariant { general, derangement };

/// b_n(y, 1) (general, n >= 1) or b_n(y, 0) (derangement, n >= 0) as a
/// polynomial in y, via the three-term style recurrences.
MultiPoly b_rec(BVariant variant, int n);

/// The same quantity collapsed from the exhaustive P_{n,i}.
MultiPoly b_brute(BVariant variant, int n);

/// b_n(2, 1) from the integer recurrence
/// b_{n+1} = b_n + sum_{i=1}^{n} C(n, i) b_{n+1-i}, b_1 = 1.
BigInt klazar_count(int n);

/// b_n(2, 0) for n = 1..n_max, i.e. the derangement recurrence at y = 2.
std::vector<BigInt> derangement_counts(int n_max);

struct IdentityReport {
  std::string identity_id;
  int n = 0;
  bool pass = false;
  MultiPoly lhs;
  MultiPoly rhs;
  std::optional<std::string> first_difference;  // canonical monomial of lhs - rhs
  std::optional<Permutation> witness;           // first permutation carrying it
};

/// Known ids: brenti, kz-total, kz-refined, signed-sni, signed-sn,
/// signed-d-t, signed-d-parity.
const std::vector<std::string>& identity_ids();

/// Smallest n at which the identity is stated (signed-sni, signed-sn: 2).
int identity_min_n(std::string_view identity_id);

/// Brute-force lhs against the closed-form rhs. Throws
/// std::invalid_argument for an unknown id or n outside [min, 8].
IdentityReport identity_check(std::string_view identity_id, int n);

/// Fills pass / first_difference / witness for a given lhs and rhs, using
/// the identity's enumeration and weight to find the witness.
IdentityReport localize_mismatch(std::string_view identity_id, int n, MultiPoly lhs,
                                 MultiPoly rhs);

}  // namespace cdes

#endif  // CDES_STATISTICS_ENGINE_HPP
