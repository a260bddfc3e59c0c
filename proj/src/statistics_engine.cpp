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

#include "cdes/statistics_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cdes {

namespace {

const MultiPoly kX = MultiPoly::variable(Var::x);
const MultiPoly kY = MultiPoly::variable(Var::y);
const MultiPoly kT = MultiPoly::variable(Var::t);

void require_brute_range(int n, int i) {
  if (n < 1 || n > kBruteForceMaxN) {
    throw std::out_of_range("brute force supports 1 <= n <= " +
                            std::to_string(kBruteForceMaxN) + ", got " + std::to_string(n));
  }
  if (i < 1 || i > n) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

void require_recurrence_range(int n, int lo) {
  if (n < lo || n > kRecurrenceMaxN) {
    throw std::out_of_range("recurrence supports " + std::to_string(lo) + " <= n <= " +
                            std::to_string(kRecurrenceMaxN) + ", got " + std::to_string(n));
  }
}

// Signed exponent histogram; converted to a MultiPoly once at the end.
class TermCounter {
 public:
  void add(const Exponents& e, int sign) { counts_[e] += sign; }
  MultiPoly to_poly() const {
    MultiPoly p;
    for (const auto& [e, c] : counts_) p.add_term(e, BigInt(c));
    return p;
  }

 private:
  std::map<Exponents, long long> counts_;
};

MultiPoly sum_range(const PolyTable& table, int lo, int hi) {
  MultiPoly s;
  for (int j = lo; j <= hi; ++j) s += table.at(j);
  return s;
}

// One step of the deletion recurrence shared by both q-specializations:
//   P_{m+1,i} = x P_{m-1} + x sum_{j=2}^{i-1} P_{m,j} + y sum_{j=i}^{m} P_{m,j}
MultiPoly recurrence_entry(const MultiPoly& prev_total, const PolyTable& current, int i) {
  const int m = current.n;
  return kX * prev_total + kX * sum_range(current, 2, i - 1) + kY * sum_range(current, i, m);
}

}  // namespace

const MultiPoly& PolyTable::at(int i) const {
  if (i < 1 || i > n) throw std::out_of_range("table index outside 1..n");
  return entries[static_cast<std::size_t>(i - 1)];
}

MultiPoly PolyTable::total() const {
  MultiPoly s;
  for (const auto& p : entries) s += p;
  return s;
}

MultiPoly p_brute(int n, int i, PMode mode) {
  require_brute_range(n, i);
  TermCounter counter;
  const Family family = mode == PMode::all ? Family::one_at_i : Family::derangements_one_at_i;
  for_each_permutation(family, n, i, [&](std::span<const int> w) {
    const FastStats s = fast_statistics(w);
    counter.add({s.exc, s.cdes, s.fix, s.inv1}, 1);
  });
  return counter.to_poly();
}

PolyTable p_brute_table(int n, PMode mode) {
  require_brute_range(n, 1);
  std::vector<TermCounter> counters(static_cast<std::size_t>(n));
  const Family family = mode == PMode::all ? Family::all : Family::derangements;
  for_each_permutation(family, n, 0, [&](std::span<const int> w) {
    const FastStats s = fast_statistics(w);
    counters[static_cast<std::size_t>(s.inv1 - 1)].add({s.exc, s.cdes, s.fix, s.inv1}, 1);
  });
  PolyTable table{n, {}};
  for (const auto& c : counters) table.entries.push_back(c.to_poly());
  return table;
}

PolyTable p_rec_q1(int n) {
  require_recurrence_range(n, 1);
  PolyTable p1{1, {MultiPoly(1)}};
  if (n == 1) return p1;
  PolyTable p2{2, {MultiPoly(1), kX}};
  PolyTable prev = p1;
  PolyTable cur = p2;
  for (int m = 2; m < n; ++m) {
    PolyTable next{m + 1, {}};
    next.entries.push_back(cur.total());
    const MultiPoly prev_total = prev.total();
    for (int i = 2; i <= m + 1; ++i) next.entries.push_back(recurrence_entry(prev_total, cur, i));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyTable p_rec_q0(int n) {
  require_recurrence_range(n, 2);
  // P_0 = 1 is the empty derangement; no derangement of [1] exists.
  MultiPoly prev_total(1);
  PolyTable cur{1, {MultiPoly()}};
  for (int m = 1; m < n; ++m) {
    PolyTable next{m + 1, {MultiPoly()}};  // pi(1) = 1 is never a derangement
    for (int i = 2; i <= m + 1; ++i) next.entries.push_back(recurrence_entry(prev_total, cur, i));
    prev_total = cur.total();
    cur = std::move(next);
  }
  return cur;
}

MultiPoly closed_form(ClosedFormVariant variant, int n, int i) {
  if (n < 2) throw std::invalid_argument("closed forms are stated for n >= 2");
  if (i < 1 || i > n) throw std::out_of_range("index outside 1..n");
  const unsigned e = static_cast<unsigned>(n - 2);
  if (variant == ClosedFormVariant::q1) {
    if (i == 1) return kT * (1 + kX).pow(e);
    if (i == n) return MultiPoly::variable(Var::t, n) * kX * (1 + kX).pow(e);
    return MultiPoly();
  }
  if (i == 1) throw std::invalid_argument("q0 closed form requires 2 <= i <= n");
  const int sign = (n - i) % 2 == 0 ? 1 : -1;
  return MultiPoly::monomial(sign, i - 1, 0, 0, i);
}

MultiPoly b_rec(BVariant variant, int n) {
  const MultiPoly y_minus_1 = kY - 1;
  if (variant == BVariant::general) {
    require_recurrence_range(n, 1);
    // b[k] = b_k(y, 1); b[0] unused.
    std::vector<MultiPoly> b(static_cast<std::size_t>(n) + 1);
    b[1] = MultiPoly(1);
    for (int m = 1; m < n; ++m) {
      MultiPoly next = b[static_cast<std::size_t>(m)];
      for (int i = 1; i <= m; ++i) {
        next += b[static_cast<std::size_t>(i)] * MultiPoly(binomial(m, i - 1)) *
                y_minus_1.pow(static_cast<unsigned>(m - i));
      }
      b[static_cast<std::size_t>(m + 1)] = std::move(next);
    }
    return b[static_cast<std::size_t>(n)];
  }
  require_recurrence_range(n, 0);
  std::vector<MultiPoly> b(static_cast<std::size_t>(std::max(n, 1)) + 1);
  b[0] = MultiPoly(1);
  b[1] = MultiPoly();
  for (int m = 1; m < n; ++m) {
    MultiPoly next;
    for (int i = 0; i <= m - 1; ++i) {
      next += MultiPoly(binomial(m, i)) *
              (b[static_cast<std::size_t>(i + 1)] + b[static_cast<std::size_t>(i)]) *
              y_minus_1.pow(static_cast<unsigned>(m - i - 1));
    }
    b[static_cast<std::size_t>(m + 1)] = std::move(next);
  }
  return b[static_cast<std::size_t>(n)];
}

MultiPoly b_brute(BVariant variant, int n) {
  if (variant == BVariant::derangement && n == 0) return MultiPoly(1);
  require_brute_range(n, 1);
  const BigInt q = variant == BVariant::general ? 1 : 0;
  Bindings collapse;
  collapse.set(Var::x, 1).set(Var::q, q).set(Var::t, 1);
  MultiPoly s;
  for (int i = 1; i <= n; ++i) s += p_brute(n, i, PMode::all).eval_partial(collapse);
  return s;
}

BigInt klazar_count(int n) {
  require_recurrence_range(n, 1);
  std::vector<BigInt> b(static_cast<std::size_t>(n) + 1);
  b[1] = 1;
  for (int m = 1; m < n; ++m) {
    BigInt next = b[static_cast<std::size_t>(m)];
    for (int i = 1; i <= m; ++i) next += b[static_cast<std::size_t>(m + 1 - i)] * binomial(m, i);
    b[static_cast<std::size_t>(m + 1)] = next;
  }
  return b[static_cast<std::size_t>(n)];
}

std::vector<BigInt> derangement_counts(int n_max) {
  std::vector<BigInt> out;
  Bindings at2;
  at2.set(Var::y, 2);
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(b_rec(BVariant::derangement, n).eval_partial(at2).coefficient({0, 0, 0, 0}));
  }
  return out;
}

// --- identity battery -----------------------------------------------------

namespace {

struct Signed {
  int sign;
  Exponents e;
};

struct IdentityDef {
  std::string id;
  int min_n;
  // Enumeration parts: (family, index) pairs to sum over.
  std::function<std::vector<std::pair<Family, int>>(int n)> parts;
  std::function<Signed(const FastStats& s, int part_index)> weight;
  std::function<MultiPoly(int n)> rhs;
};

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

const std::vector<IdentityDef>& identity_defs() {
  static const std::vector<IdentityDef> defs = {
      {"brenti", 1,
       [](int) { return std::vector<std::pair<Family, int>>{{Family::all, 0}}; },
       [](const FastStats& s, int) { return Signed{parity_sign(s.cyc), {s.exc, 0, 0, 0}}; },
       [](int n) { return -(kX - 1).pow(static_cast<unsigned>(n - 1)); }},
      {"kz-total", 1,
       [](int) { return std::vector<std::pair<Family, int>>{{Family::derangements, 0}}; },
       [](const FastStats& s, int) { return Signed{parity_sign(s.cyc), {s.exc, 0, 0, 0}}; },
       [](int n) {
         MultiPoly r;
         for (int k = 1; k <= n - 1; ++k) r -= MultiPoly::variable(Var::x, k);
         return r;
       }},
      // pi(n) = i, marked by t^i so one polynomial carries every i. The
      // identity is stated for i <= n-1: pi(n) = n is never a derangement.
      {"kz-refined", 1,
       [](int n) {
         std::vector<std::pair<Family, int>> parts;
         for (int i = 1; i <= n - 1; ++i) parts.emplace_back(Family::derangements_last_is_i, i);
         return parts;
       },
       [](const FastStats& s, int i) { return Signed{parity_sign(s.cyc), {s.exc, 0, 0, i}}; },
       [](int n) {
         MultiPoly r;
         for (int i = 1; i <= n - 1; ++i) r -= MultiPoly::monomial(1, n - i, 0, 0, i);
         return r;
       }},
      {"signed-sni", 2,
       [](int n) {
         std::vector<std::pair<Family, int>> parts;
         for (int i = 1; i <= n; ++i) parts.emplace_back(Family::one_at_i, i);
         return parts;
       },
       [](const FastStats& s, int) { return Signed{parity_sign(s.cdes), {0, 0, 0, s.inv1}}; },
       [](int n) {
         // 2^{n-2} t for i = 1, 0 for 1 < i < n, 2^{n-2} t^n for i = n.
         const BigInt c = BigInt(1) << (n - 2);
         return MultiPoly::monomial(c, 0, 0, 0, 1) + MultiPoly::monomial(c, 0, 0, 0, n);
       }},
      {"signed-sn", 2,
       [](int) { return std::vector<std::pair<Family, int>>{{Family::all, 0}}; },
       [](const FastStats& s, int) { return Signed{parity_sign(s.cdes), {0, 0, 0, s.inv1}}; },
       [](int n) {
         return MultiPoly(BigInt(1) << (n - 2)) * (kT + MultiPoly::variable(Var::t, n));
       }},
      {"signed-d-t", 1,
       [](int) { return std::vector<std::pair<Family, int>>{{Family::derangements, 0}}; },
       [](const FastStats& s, int) {
         return Signed{parity_sign(s.cdes), {s.exc, 0, 0, s.inv1}};
       },
       [](int n) {
         MultiPoly r;
         for (int i = 2; i <= n; ++i) r += MultiPoly::monomial(parity_sign(n - i), i - 1, 0, 0, i);
         return r;
       }},
      {"signed-d-parity", 1,
       [](int) { return std::vector<std::pair<Family, int>>{{Family::derangements, 0}}; },
       [](const FastStats& s, int) { return Signed{parity_sign(s.cdes), {0, 0, 0, 0}}; },
       [](int n) { return MultiPoly((1 - parity_sign(n - 1)) / 2); }},
  };
  return defs;
}

const IdentityDef& find_identity(std::string_view id) {
  for (const auto& d : identity_defs()) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : identity_defs()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

int identity_min_n(std::string_view identity_id) { return find_identity(identity_id).min_n; }

IdentityReport localize_mismatch(std::string_view identity_id, int n, MultiPoly lhs,
                                 MultiPoly rhs) {
  const IdentityDef& def = find_identity(identity_id);
  IdentityReport report;
  report.identity_id = def.id;
  report.n = n;
  report.pass = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  if (report.pass) return report;

  const MultiPoly diff = report.lhs - report.rhs;
  const Exponents target = diff.terms().begin()->first;
  report.first_difference = to_string(target);
  for (const auto& [family, index] : def.parts(n)) {
    if (report.witness) break;
    std::optional<std::vector<int>> found;
    for_each_permutation(family, n, index, [&](std::span<const int> w) {
      if (found) return;
      if (def.weight(fast_statistics(w), index).e == target) found.emplace(w.begin(), w.end());
    });
    if (found) report.witness = Permutation(std::move(*found));
  }
  return report;
}

IdentityReport identity_check(std::string_view identity_id, int n) {
  const IdentityDef& def = find_identity(identity_id);
  if (n < def.min_n || n > 8) {
    throw std::invalid_argument("identity " + def.id + " is checked for " +
                                std::to_string(def.min_n) + " <= n <= 8, got " +
                                std::to_string(n));
  }
  TermCounter lhs;
  for (const auto& [family, index] : def.parts(n)) {
    for_each_permutation(family, n, index, [&](std::span<const int> w) {
      const Signed term = def.weight(fast_statistics(w), index);
      lhs.add(term.e, term.sign);
    });
  }
  return localize_mismatch(identity_id, n, lhs.to_poly(), def.rhs(n));
}

}  // namespace cdes
