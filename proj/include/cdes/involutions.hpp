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

#ifndef CDES_INVOLUTIONS_HPP
#define CDES_INVOLUTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cdes/permutation.hpp"

namespace cdes {

// Sign-reversing involutions on S_{n,i} = {pi : pi(i) = 1} and on the
// derangements D_{n,i} therein. Off their fixed points each map preserves
// exc and moves cdes by exactly one, so the signed sums
// sum x^exc (-1)^cdes collapse onto the fixed sets.

enum class Branch {
  fixed,
  phi_split,     // cut the cycle after the last top-descent
  phi_merge,     // join the cycle ending at the last top-descent with the next
  psi_case1,     // detach the increasing prefix of the first cycle
  psi_case2,     // splice the last cycle into the first
  varphi_case2,  // merge the last cycle into the one before it
  varphi_case3,  // split the last cycle
};

std::string to_string(Branch b);

struct InvolutionOutcome {
  Permutation image;
  Branch branch = Branch::fixed;
  int delta_cdes = 0;  // cdes(image) - cdes(input)
};

/// The last entry of hat(pi) exceeding its successor; empty iff
/// hat(pi) = 1 2 ... n.
std::optional<int> last_top_descent(const Permutation& pi);

/// Split/merge at the last top-descent. Throws std::domain_error when
/// hat(pi) has no top-descent.
InvolutionOutcome phi_map(const Permutation& pi);

/// min Q for the cycle through 1, where Q collects the positions j of that
/// cycle (1, c_1, ..., c_l) whose entry c_j is below
/// max([n] \ {c_{j+1}, ..., c_l}). Empty when Q is empty.
std::optional<int> m_index(const Permutation& pi);

/// The involution on S_{n,i}. Requires n >= 2 and pi(i) = 1.
InvolutionOutcome psi(int n, int i, const Permutation& pi);

/// The fixed set of psi(n, i, .), built directly (not by filtering):
/// hat = identity for i = 1; hat = 1,k,...,n,2,...,k-1 for i = n; empty
/// otherwise. Lexicographic order.
std::vector<Permutation> psi_fixed_set(int n, int i);

/// (1, 2, ..., i-1, n, n-1, ..., i).
Permutation sigma_fixed_point(int n, int i);

/// The involution on D_{n,i}, 2 <= i <= n, with unique fixed point
/// sigma_fixed_point(n, i).
InvolutionOutcome varphi(int n, int i, const Permutation& pi);

}  // namespace cdes

#endif  // CDES_INVOLUTIONS_HPP
