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

#include "cdes/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cdes {

namespace {

using Cycle = std::vector<int>;

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void require_negative_cdes(const SignedPermutation& sp) {
  if (!is_negative_cdes(sp)) {
    throw std::invalid_argument("negative elements are not all cycle descents");
  }
}

std::vector<MVertex> row_partners(const PerfectMatching& m, int n, int row) {
  std::vector<MVertex> out(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : m.edges()) {
    if (e.first.row == row) out[static_cast<std::size_t>(e.first.index)] = e.second;
    if (e.second.row == row) out[static_cast<std::size_t>(e.second.index)] = e.first;
  }
  return out;
}

}  // namespace

bool SignedPermutation::is_negative(int value) const { return contains(neg, value); }

SignedPermutation make_signed(Permutation perm, std::vector<int> neg) {
  std::sort(neg.begin(), neg.end());
  if (std::adjacent_find(neg.begin(), neg.end()) != neg.end()) {
    throw std::invalid_argument("repeated value in the negative set");
  }
  for (int v : neg) {
    if (v < 1 || v > perm.size()) throw std::invalid_argument("negative value outside 1..n");
  }
  return {std::move(perm), std::move(neg)};
}

bool is_negative_cdes(const SignedPermutation& sp) {
  const std::vector<int> cdes_set = statistics(sp.perm).cdes_set;
  return std::includes(cdes_set.begin(), cdes_set.end(), sp.neg.begin(), sp.neg.end());
}

void for_each_negative_cdes(int n, SignedFilter filter,
                            const std::function<void(const SignedPermutation&)>& visit) {
  if (n < 0 || n > kSignedEnumMaxN) {
    throw std::out_of_range("signed enumeration supports 0 <= n <= " +
                            std::to_string(kSignedEnumMaxN));
  }
  const Family family = filter == SignedFilter::all ? Family::all : Family::derangements;
  for_each_permutation(family, n, 0, [&](std::span<const int> word) {
    Permutation perm(std::vector<int>(word.begin(), word.end()));
    const std::vector<int> cdes_set = statistics(perm).cdes_set;
    const unsigned subsets = 1U << cdes_set.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<int> neg;
      for (std::size_t b = 0; b < cdes_set.size(); ++b) {
        if (mask >> b & 1U) neg.push_back(cdes_set[b]);
      }
      visit(SignedPermutation{perm, std::move(neg)});
    }
  });
}

std::vector<SignedPermutation> enumerate_negative_cdes(int n, SignedFilter filter) {
  std::vector<SignedPermutation> out;
  for_each_negative_cdes(n, filter, [&](const SignedPermutation& sp) { out.push_back(sp); });
  return out;
}

BlockSeq blocks(const std::vector<int>& cycle, const std::vector<int>& neg) {
  if (cycle.empty()) return {};
  if (contains(neg, cycle.front())) {
    throw std::invalid_argument("the cycle minimum cannot carry a negative sign");
  }
  BlockSeq out;
  std::vector<int> current;
  for (int c : cycle) {
    current.push_back(c);
    if (!contains(neg, c)) {
      std::sort(current.begin(), current.end(), std::greater<>());
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) throw std::invalid_argument("the last cycle element must be positive");
  return out;
}

PerfectMatching theta(const SignedPermutation& sp) {
  const int l = sp.size();
  if (l == 0) return mk_matching(0, {});
  const auto cycles = standard_cycles(sp.perm).cycles;
  if (cycles.size() != 1) throw std::invalid_argument("theta requires a cyclic permutation");
  require_negative_cdes(sp);
  const BlockSeq bs = blocks(cycles.front(), sp.neg);
  const std::size_t k = bs.size();

  std::vector<Edge> edges;
  for (const auto& b : bs) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      edges.push_back(Edge::make({b[j], 0}, {b[j + 1], 1}));
    }
  }
  for (std::size_t i = 1; i < k; ++i) {  // 1-based block i links to i + 1
    const auto& cur = bs[i - 1];
    const auto& nxt = bs[i];
    if (i % 2 == 1) {
      edges.push_back(Edge::make({cur.back(), 0}, {nxt.back(), 0}));
    } else {
      edges.push_back(Edge::make({cur.front(), 1}, {nxt.front(), 1}));
    }
  }
  if (k % 2 == 1) {
    edges.push_back(Edge::make({1, 1}, {bs.back().back(), 0}));
  } else {
    edges.push_back(Edge::make({1, 1}, {bs.back().front(), 1}));
  }
  return mk_matching(l, std::move(edges));
}

SignedPermutation theta_inv(const PerfectMatching& m) {
  const int l = m.size();
  for (int p = 0; p < l; ++p) {
    if (m.support()[static_cast<std::size_t>(p)] != p + 1) {
      throw std::invalid_argument("theta_inv requires support 1..l");
    }
  }
  if (l == 0) return {Permutation::identity(0), {}};
  if (!is_callan(m)) throw std::invalid_argument("theta_inv requires a Callan matching");
  if (!is_connected(m)) throw std::invalid_argument("theta_inv requires a connected matching");

  const std::vector<MVertex> from_bottom = row_partners(m, l, 0);
  const std::vector<MVertex> from_top = row_partners(m, l, 1);

  // Walk the path left after deleting the edge at (1,1).
  std::vector<int> path{1};
  std::vector<bool> bar_after;
  int leave_row = 0;
  for (int step = 1; step < l; ++step) {
    const int a = path.back();
    const MVertex next =
        (leave_row == 0 ? from_bottom : from_top)[static_cast<std::size_t>(a)];
    bar_after.push_back(next.row == leave_row);  // an arc keeps the row
    path.push_back(next.index);
    leave_row = 1 - next.row;
  }
  bar_after.push_back(true);

  std::vector<int> cycle;
  std::vector<int> neg;
  std::vector<int> block;
  for (std::size_t p = 0; p < path.size(); ++p) {
    block.push_back(path[p]);
    if (!bar_after[p]) continue;
    std::sort(block.begin(), block.end(), std::greater<>());
    for (std::size_t q = 0; q + 1 < block.size(); ++q) neg.push_back(block[q]);
    cycle.insert(cycle.end(), block.begin(), block.end());
    block.clear();
  }
  std::vector<int> seen = cycle;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::logic_error("path walk revisited a vertex");
  }
  return make_signed(from_cycles(l, {cycle}), std::move(neg));
}

PerfectMatching gamma(const SignedPermutation& sp) {
  require_negative_cdes(sp);
  std::vector<Edge> edges;
  for (const Cycle& c : standard_cycles(sp.perm).cycles) {
    Cycle values = c;
    std::sort(values.begin(), values.end());
    const std::vector<int> ranks = rank_relabel(c);
    std::vector<int> local_neg;
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (sp.is_negative(c[p])) local_neg.push_back(ranks[p]);
    }
    const int l = static_cast<int>(c.size());
    const PerfectMatching local =
        theta(make_signed(from_cycles(l, {ranks}), std::move(local_neg)));
    auto lift = [&](MVertex v) {
      return MVertex{values[static_cast<std::size_t>(v.index - 1)], v.row};
    };
    for (const Edge& e : local.edges()) edges.push_back(Edge::make(lift(e.first), lift(e.second)));
  }
  return mk_matching(sp.size(), std::move(edges));
}

SignedPermutation gamma_inv(const PerfectMatching& m) {
  if (!is_callan(m)) throw std::invalid_argument("gamma_inv requires a Callan matching");
  std::vector<Cycle> cycles;
  std::vector<int> neg;
  for (const PerfectMatching& comp : components(m)) {
    const std::vector<int>& values = comp.support();
    auto lower = [&](MVertex v) {
      const auto p = std::lower_bound(values.begin(), values.end(), v.index) - values.begin();
      return MVertex{static_cast<int>(p) + 1, v.row};
    };
    std::vector<Edge> local_edges;
    for (const Edge& e : comp.edges()) {
      local_edges.push_back(Edge::make(lower(e.first), lower(e.second)));
    }
    const int l = comp.size();
    const SignedPermutation local = theta_inv(mk_matching(l, std::move(local_edges)));
    Cycle lifted;
    const CycleDecomposition local_cycles = standard_cycles(local.perm);
    for (int r : local_cycles.cycles.front()) {
      lifted.push_back(values[static_cast<std::size_t>(r - 1)]);
    }
    for (int r : local.neg) neg.push_back(values[static_cast<std::size_t>(r - 1)]);
    cycles.push_back(std::move(lifted));
  }
  const int n = m.support().empty() ? 0 : m.support().back();
  return make_signed(from_cycles(n, cycles), std::move(neg));
}

DownlineCheck downline_check(const SignedPermutation& cyclic) {
  const PerfectMatching m = theta(cyclic);
  DownlineCheck out;
  out.down = match_stats(m).down;
  out.neg = static_cast<int>(cyclic.neg.size());
  out.closing_is_downline =
      edge_class(Edge::make({1, 1}, m.partner({1, 1}))) == EdgeClass::downline;
  return out;
}

bool global_downline_statement(const SignedPermutation& sp, bool vertical_as_same_row) {
  const PerfectMatching m = gamma(sp);
  const int down = match_stats(m).down;
  const int neg = static_cast<int>(sp.neg.size());
  const MVertex partner = m.partner({1, 1});
  const bool same_row = partner.row == 1 || (vertical_as_same_row && partner.index == 1);
  return down == (same_row ? neg : neg + 1);
}

GlobalDownlineReport global_downline_report(int n) {
  GlobalDownlineReport report;
  report.n = n;
  for_each_negative_cdes(n, SignedFilter::all, [&](const SignedPermutation& sp) {
    const bool ok = global_downline_statement(sp);
    const bool cyclic = standard_cycles(sp.perm).size() == 1;
    ++report.total;
    if (ok) ++report.holds;
    if (global_downline_statement(sp, true)) ++report.holds_vertical_as_same_row;
    if (cyclic) {
      ++report.cyclic_total;
      if (ok) ++report.cyclic_holds;
    }
    if (!ok && !report.first_counterexample) report.first_counterexample = sp;
  });
  return report;
}

}  // namespace cdes
