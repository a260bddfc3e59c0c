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

#include "cdes/involutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdes {

namespace {

using Cycle = std::vector<int>;
using Cycles = std::vector<Cycle>;

InvolutionOutcome make_outcome(const Permutation& input, Permutation image, Branch branch) {
  const int before = statistics(input).cdes;
  const int after = statistics(image).cdes;
  return {std::move(image), branch, after - before};
}

void require_in_s_ni(int n, int i, const Permutation& pi) {
  if (n < 2) throw std::invalid_argument("involutions require n >= 2");
  if (pi.size() != n) throw std::invalid_argument("permutation size does not match n");
  if (i < 1 || i > n) throw std::out_of_range("index outside 1..n");
  if (pi(i) != 1) {
    throw std::invalid_argument("permutation is not in S_{n,i}: pi(" + std::to_string(i) +
                                ") != 1");
  }
}

// Appends consecutive runs of `values` (increasing) as cycles; bit b of
// `joins` set means values[b] and values[b+1] share a cycle.
void append_runs(const std::vector<int>& values, unsigned joins, Cycles& out) {
  if (values.empty()) return;
  Cycle run{values[0]};
  for (std::size_t b = 0; b + 1 < values.size(); ++b) {
    if (joins >> b & 1U) {
      run.push_back(values[b + 1]);
    } else {
      out.push_back(run);
      run = {values[b + 1]};
    }
  }
  out.push_back(run);
}

// red(seq) = (1, 2, ..., r-1, s, s-1, ..., r) for some 2 <= r <= s.
bool has_peak_form(std::span<const int> seq) {
  const std::vector<int> rank = rank_relabel(seq);
  const int s = static_cast<int>(rank.size());
  if (s < 2) return false;
  const auto peak = std::max_element(rank.begin(), rank.end()) - rank.begin();
  if (peak < 1) return false;
  for (std::ptrdiff_t p = 0; p < peak; ++p) {
    if (rank[static_cast<std::size_t>(p)] != p + 1) return false;
  }
  for (std::size_t p = static_cast<std::size_t>(peak) + 1; p < rank.size(); ++p) {
    if (rank[p] >= rank[p - 1]) return false;
  }
  return true;
}

std::size_t argmax(std::span<const int> seq) {
  return static_cast<std::size_t>(std::max_element(seq.begin(), seq.end()) - seq.begin());
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::fixed: return "fixed";
    case Branch::phi_split: return "phi-split";
    case Branch::phi_merge: return "phi-merge";
    case Branch::psi_case1: return "psi-case1";
    case Branch::psi_case2: return "psi-case2";
    case Branch::varphi_case2: return "varphi-case2";
    case Branch::varphi_case3: return "varphi-case3";
  }
  return "?";
}

std::optional<int> last_top_descent(const Permutation& pi) {
  const Word flat = hat(pi);
  const auto a = flat.entries();
  for (std::size_t p = a.size(); p-- > 1;) {
    if (a[p - 1] > a[p]) return a[p - 1];
  }
  return std::nullopt;
}

InvolutionOutcome phi_map(const Permutation& pi) {
  const std::optional<int> q = last_top_descent(pi);
  if (!q) throw std::domain_error("phi_map is undefined when hat(pi) = 1 2 ... n");
  Cycles cycles = standard_cycles(pi).cycles;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    auto it = std::find(cycles[c].begin(), cycles[c].end(), *q);
    if (it == cycles[c].end()) continue;
    if (it + 1 == cycles[c].end()) {
      // q ends its cycle; a top-descent always has a successor in hat.
      Cycle& next = cycles[c + 1];
      cycles[c].insert(cycles[c].end(), next.begin(), next.end());
      cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(c) + 1);
      return make_outcome(pi, from_cycles(pi.size(), cycles), Branch::phi_merge);
    }
    Cycle tail(it + 1, cycles[c].end());
    cycles[c].erase(it + 1, cycles[c].end());
    cycles.insert(cycles.begin() + static_cast<std::ptrdiff_t>(c) + 1, std::move(tail));
    return make_outcome(pi, from_cycles(pi.size(), cycles), Branch::phi_split);
  }
  throw std::logic_error("last top-descent not found in any cycle");
}

std::optional<int> m_index(const Permutation& pi) {
  const int n = pi.size();
  if (n == 0) return std::nullopt;
  const Cycle first = standard_cycles(pi).cycles.front();
  const int l = static_cast<int>(first.size()) - 1;  // first = (1, c_1, ..., c_l)
  std::vector<bool> in_suffix(static_cast<std::size_t>(n) + 1, false);
  int available_max = n;  // max([n] \ {c_{j+1}, ..., c_l})
  // Walk j = l down to 1 so the excluded suffix grows by one each step,
  // then report the smallest qualifying j.
  std::optional<int> best;
  for (int j = l; j >= 1; --j) {
    const int cj = first[static_cast<std::size_t>(j)];
    if (cj < available_max) best = j;
    in_suffix[static_cast<std::size_t>(cj)] = true;
    while (available_max > 0 && in_suffix[static_cast<std::size_t>(available_max)]) {
      --available_max;
    }
  }
  return best;
}

InvolutionOutcome psi(int n, int i, const Permutation& pi) {
  require_in_s_ni(n, i, pi);
  const std::optional<int> q = last_top_descent(pi);
  if (i == 1) {
    if (!q) return {pi, Branch::fixed, 0};
    return phi_map(pi);
  }

  Cycles cycles = standard_cycles(pi).cycles;
  const Cycle& first = cycles.front();
  const bool q_in_first = q && std::find(first.begin(), first.end(), *q) != first.end();
  if (q && !q_in_first) return phi_map(pi);

  const std::optional<int> m = m_index(pi);
  if (!m) {
    if (i == n) return {pi, Branch::fixed, 0};
    throw std::logic_error("empty index set for 1 < i < n");
  }
  const std::size_t k = cycles.size();
  if (*m >= 2) {
    // (1, c_1, ..., c_l) -> (1, c_m, ..., c_l) . C_2 ... C_k . (c_1, ..., c_{m-1})
    Cycle head{1};
    head.insert(head.end(), first.begin() + *m, first.end());
    Cycle detached(first.begin() + 1, first.begin() + *m);
    cycles.front() = std::move(head);
    cycles.push_back(std::move(detached));
    return make_outcome(pi, from_cycles(n, cycles), Branch::psi_case1);
  }
  if (k < 2) throw std::logic_error("m = 1 with a single cycle");
  // (1, c_1, ..., c_l) ... C_k -> (1, C_k, c_1, ..., c_l) . C_2 ... C_{k-1}
  Cycle merged{1};
  merged.insert(merged.end(), cycles.back().begin(), cycles.back().end());
  merged.insert(merged.end(), first.begin() + 1, first.end());
  cycles.pop_back();
  cycles.front() = std::move(merged);
  return make_outcome(pi, from_cycles(n, cycles), Branch::psi_case2);
}

std::vector<Permutation> psi_fixed_set(int n, int i) {
  if (n < 2) throw std::invalid_argument("psi_fixed_set requires n >= 2");
  if (i < 1 || i > n) throw std::out_of_range("index outside 1..n");
  std::vector<Permutation> out;
  if (i == 1) {
    std::vector<int> rest;
    for (int v = 2; v <= n; ++v) rest.push_back(v);
    for (unsigned joins = 0; joins < (1U << (n - 2)); ++joins) {
      Cycles cycles{{1}};
      append_runs(rest, joins, cycles);
      out.push_back(from_cycles(n, cycles));
    }
  } else if (i == n) {
    for (int k = 2; k <= n; ++k) {
      Cycle head{1};
      for (int v = k; v <= n; ++v) head.push_back(v);
      std::vector<int> rest;
      for (int v = 2; v < k; ++v) rest.push_back(v);
      const unsigned choices = rest.size() < 2 ? 1U : 1U << (rest.size() - 1);
      for (unsigned joins = 0; joins < choices; ++joins) {
        Cycles cycles{head};
        append_runs(rest, joins, cycles);
        out.push_back(from_cycles(n, cycles));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation sigma_fixed_point(int n, int i) {
  if (n < 2 || i < 2 || i > n) throw std::out_of_range("sigma^i requires 2 <= i <= n");
  Cycle c;
  for (int v = 1; v <= i - 1; ++v) c.push_back(v);
  for (int v = n; v >= i; --v) c.push_back(v);
  return from_cycles(n, {c});
}

InvolutionOutcome varphi(int n, int i, const Permutation& pi) {
  if (i < 2) throw std::out_of_range("varphi requires 2 <= i <= n");
  require_in_s_ni(n, i, pi);
  if (!pi.is_derangement()) throw std::invalid_argument("varphi requires a derangement");

  Cycles cycles = standard_cycles(pi).cycles;
  const std::size_t k = cycles.size();
  const Cycle last = cycles.back();
  const std::size_t s = last.size();

  if (has_peak_form(last)) {
    if (k == 1) return {pi, Branch::fixed, 0};  // last is then sigma^i
    const Cycle prev = cycles[k - 2];
    const std::size_t j = argmax(last);  // 0-based; j >= 1 by the form
    Cycle merged{prev[0]};
    if (prev[1] < last[j - 1]) {
      merged.insert(merged.end(), last.begin(), last.end());
    } else {
      // c_{k,j-1} moves from before the peak to the end of the block.
      merged.insert(merged.end(), last.begin(), last.begin() + static_cast<std::ptrdiff_t>(j) - 1);
      merged.insert(merged.end(), last.begin() + static_cast<std::ptrdiff_t>(j), last.end());
      merged.push_back(last[j - 1]);
    }
    merged.insert(merged.end(), prev.begin() + 1, prev.end());
    cycles.pop_back();
    cycles.back() = std::move(merged);
    return make_outcome(pi, from_cycles(n, cycles), Branch::varphi_case2);
  }

  // Longest prefix with the peak form; it has length >= 3 and < s.
  std::size_t len = 2;
  while (len < s && has_peak_form(std::span<const int>(last.data(), len + 1))) ++len;
  if (len < 3 || len >= s) throw std::logic_error("unexpected peak-form prefix length");
  const std::size_t j = argmax(std::span<const int>(last.data(), len));
  const int next = last[len];

  Cycle kept{last[0]};
  kept.insert(kept.end(), last.begin() + static_cast<std::ptrdiff_t>(len), last.end());
  Cycle split;
  if (next < last[j - 1]) {
    split.assign(last.begin() + 1, last.begin() + static_cast<std::ptrdiff_t>(len));
  } else if (next > last[len - 1]) {
    // The prefix's final entry returns to just before its peak.
    split.assign(last.begin() + 1, last.begin() + static_cast<std::ptrdiff_t>(j));
    split.push_back(last[len - 1]);
    split.insert(split.end(), last.begin() + static_cast<std::ptrdiff_t>(j),
                 last.begin() + static_cast<std::ptrdiff_t>(len) - 1);
  } else {
    throw std::logic_error("peak-form prefix extends past its computed length");
  }
  cycles.back() = std::move(kept);
  cycles.push_back(std::move(split));
  return make_outcome(pi, from_cycles(n, cycles), Branch::varphi_case3);
}

}  // namespace cdes
