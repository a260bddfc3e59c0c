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

#include "cdes/tables.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cdes/involutions.hpp"
#include "cdes/permutation.hpp"
#include "cdes/polynomial.hpp"

namespace cdes {

namespace {

std::string cycles_text(const Permutation& pi) { return format_cycles(pi, pi.size() <= 9); }

std::string hat_text(const Permutation& pi) {
  const Word flat = hat(pi);
  std::string out;
  for (int a : flat.entries()) {
    if (pi.size() > 9 && !out.empty()) out += ' ';
    out += std::to_string(a);
  }
  return out;
}

std::string weight_text(const Permutation& pi) {
  const StatRecord s = statistics(pi);
  return MultiPoly::monomial(s.cdes % 2 == 0 ? 1 : -1, s.exc).to_string();
}

// Canonical row order over an involution given by `image_of`.
std::vector<Permutation> row_order(const std::vector<Permutation>& domain,
                                   const std::function<Permutation(const Permutation&)>& image_of) {
  std::vector<Permutation> fixed;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const Permutation& pi : domain) {
    const Permutation img = image_of(pi);
    if (img == pi) {
      fixed.push_back(pi);
    } else if (statistics(pi).cdes % 2 == 0) {
      pairs.emplace_back(pi, img);
    }
  }
  std::sort(fixed.begin(), fixed.end());
  std::sort(pairs.begin(), pairs.end());
  std::vector<Permutation> out = fixed;
  for (auto& [even, odd] : pairs) {
    out.push_back(even);
    out.push_back(odd);
  }
  return out;
}

std::string psi_table(int n, int i) {
  auto image_of = [&](const Permutation& pi) { return psi(n, i, pi).image; };
  std::string out;
  for (const Permutation& pi : row_order(enumerate(Family::one_at_i, n, i), image_of)) {
    const std::optional<int> q = last_top_descent(pi);
    out += cycles_text(pi) + '|' + weight_text(pi) + '|' + hat_text(pi) + '|' +
           (q ? std::to_string(*q) : "") + '|';
    if (i >= 2) {
      const auto first = standard_cycles(pi).cycles.front();
      const bool in_a = q && std::find(first.begin(), first.end(), *q) == first.end();
      const std::optional<int> m = in_a ? std::nullopt : m_index(pi);
      out += (m ? std::to_string(*m) : "") + '|';
    }
    out += cycles_text(image_of(pi)) + '\n';
  }
  return out;
}

std::string varphi_table(int n, int i) {
  auto image_of = [&](const Permutation& pi) { return varphi(n, i, pi).image; };
  std::string out;
  for (const Permutation& pi :
       row_order(enumerate(Family::derangements_one_at_i, n, i), image_of)) {
    const Permutation img = image_of(pi);
    out += std::to_string(i) + '|' + cycles_text(pi) + '|' + cycles_text(img) + '|' +
           (img == pi ? "fixed" : "") + '\n';
  }
  return out;
}

}  // namespace

std::optional<TableKind> table_kind_from_string(std::string_view name) {
  if (name == "psi") return TableKind::psi;
  if (name == "varphi") return TableKind::varphi;
  return std::nullopt;
}

std::string emit_table(TableKind kind, int n, std::optional<int> i) {
  if (n < 2 || n > kTableMaxN) {
    throw std::out_of_range("table size must satisfy 2 <= n <= " + std::to_string(kTableMaxN));
  }
  if (kind == TableKind::psi) {
    if (!i) throw std::out_of_range("psi tables need an index i");
    if (*i < 1 || *i > n) throw std::out_of_range("psi index must satisfy 1 <= i <= n");
    return psi_table(n, *i);
  }
  if (i) {
    if (*i < 2 || *i > n) throw std::out_of_range("varphi index must satisfy 2 <= i <= n");
    return varphi_table(n, *i);
  }
  std::string out;
  for (int k = 2; k <= n; ++k) out += varphi_table(n, k);
  return out;
}

std::string strip_comment_lines(std::string_view text) {
  std::string out;
  std::size_t p = 0;
  while (p < text.size()) {
    std::size_t end = text.find('\n', p);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end + 1;
    if (text[p] != '#') out.append(text.substr(p, stop - p));
    p = stop;
  }
  return out;
}

}  // namespace cdes
