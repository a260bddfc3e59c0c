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

#include "cdes/verification.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cdes/bijections.hpp"
#include "cdes/involutions.hpp"
#include "cdes/matching.hpp"
#include "cdes/serialization.hpp"
#include "cdes/statistics_engine.hpp"

namespace cdes {

namespace {

struct Partial {
  std::int64_t checks = 0;
  std::vector<VerificationFailure> failures;
  std::vector<std::string> notes;

  template <typename Witness>
  void expect(bool ok, const std::string& check, int n, Witness&& witness) {
    ++checks;
    if (!ok) failures.push_back({check, n, witness()});
  }
  void expect(bool ok, const std::string& check, int n) {
    expect(ok, check, n, [] { return std::string(); });
  }
};

using Task = std::function<Partial()>;

std::string mismatch(const MultiPoly& lhs, const MultiPoly& rhs) {
  return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

std::string perm_text(const Permutation& pi) { return format_cycles(pi); }

MultiPoly eval(const MultiPoly& p, std::initializer_list<std::pair<Var, int>> values) {
  Bindings b;
  for (const auto& [v, value] : values) b.set(v, value);
  return p.eval_partial(b);
}

// ---- theorem-p --------------------------------------------------------------

void add_theorem_p(int n_max, std::vector<Task>& tasks) {
  for (int n = 2; n <= n_max; ++n) {
    tasks.emplace_back([n] {
      Partial out;
      const PolyTable all = p_brute_table(n, PMode::all);
      const PolyTable der = p_brute_table(n, PMode::derangement);
      for (int i = 1; i <= n; ++i) {
        const MultiPoly lhs = eval(all.at(i), {{Var::y, -1}, {Var::q, 1}});
        const MultiPoly rhs = closed_form(ClosedFormVariant::q1, n, i);
        out.expect(lhs == rhs, "closed-form-q1 i=" + std::to_string(i), n,
                   [&] { return mismatch(lhs, rhs); });
      }
      for (int i = 2; i <= n; ++i) {
        const MultiPoly lhs = eval(der.at(i), {{Var::y, -1}, {Var::q, 0}});
        const MultiPoly rhs = closed_form(ClosedFormVariant::q0, n, i);
        out.expect(lhs == rhs, "closed-form-q0 i=" + std::to_string(i), n,
                   [&] { return mismatch(lhs, rhs); });
      }
      return out;
    });
  }
}

// ---- theorem-b --------------------------------------------------------------

const std::vector<long long> kGeneralAtTwo = {1, 2, 7, 35, 226, 1787, 16717};
const std::vector<long long> kDerangementAtTwo = {0, 1, 3, 16};

void add_theorem_b(int n_max, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) {
    tasks.emplace_back([n] {
      Partial out;
      const std::vector<BigInt> der_counts = derangement_counts(n);
      for (BVariant v : {BVariant::general, BVariant::derangement}) {
        const std::string tag = v == BVariant::general ? "b(y,1)" : "b(y,0)";
        const MultiPoly rec = b_rec(v, n);
        const MultiPoly brute = b_brute(v, n);
        out.expect(rec == brute, tag + " recurrence vs brute force", n,
                   [&] { return mismatch(rec, brute); });
        const MultiPoly at_two = eval(rec, {{Var::y, 2}});
        const BigInt independent =
            v == BVariant::general ? klazar_count(n) : der_counts[static_cast<std::size_t>(n - 1)];
        out.expect(at_two == MultiPoly(independent), tag + " at y=2 vs integer recurrence", n,
                   [&] { return mismatch(at_two, MultiPoly(independent)); });
        const auto& frozen = v == BVariant::general ? kGeneralAtTwo : kDerangementAtTwo;
        if (n <= static_cast<int>(frozen.size())) {
          const long long want = frozen[static_cast<std::size_t>(n - 1)];
          out.expect(at_two == MultiPoly(want), tag + " at y=2 vs reference value", n,
                     [&] { return mismatch(at_two, MultiPoly(want)); });
        }
      }
      return out;
    });
  }
}

// ---- lemmas -----------------------------------------------------------------

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(0, 2);
  MultiPoly p;
  const int k = terms(rng);
  for (int j = 0; j < k; ++j) {
    p += MultiPoly::monomial(coeff(rng), expo(rng), expo(rng), expo(rng), expo(rng));
  }
  return p;
}

void add_lemmas(int n_max, std::uint64_t seed, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) {
    tasks.emplace_back([n] {
      Partial out;
      const PolyTable rec = p_rec_q1(n);
      const PolyTable brute = p_brute_table(n, PMode::all);
      for (int i = 1; i <= n; ++i) {
        const MultiPoly want = eval(brute.at(i), {{Var::q, 1}, {Var::t, 1}});
        out.expect(rec.at(i) == want, "recurrence-q1 i=" + std::to_string(i), n,
                   [&] { return mismatch(rec.at(i), want); });
      }
      if (n >= 2) {
        const PolyTable rec0 = p_rec_q0(n);
        const PolyTable der = p_brute_table(n, PMode::derangement);
        for (int i = 1; i <= n; ++i) {
          const MultiPoly want = eval(der.at(i), {{Var::q, 0}, {Var::t, 1}});
          out.expect(rec0.at(i) == want, "recurrence-q0 i=" + std::to_string(i), n,
                     [&] { return mismatch(rec0.at(i), want); });
        }
      }
      return out;
    });
  }
  tasks.emplace_back([n_max, seed] {
    Partial out;
    std::mt19937_64 rng(seed);
    const int trials = 40 * n_max;
    Bindings b;
    b.set(Var::y, -1).set(Var::q, 0);
    for (int trial = 0; trial < trials; ++trial) {
      const MultiPoly a = random_poly(rng);
      const MultiPoly c = random_poly(rng);
      const MultiPoly d = random_poly(rng);
      auto witness = [&] {
        return "a=" + a.to_string() + "; b=" + c.to_string() + "; c=" + d.to_string() +
               " (seed " + std::to_string(seed) + ")";
      };
      out.expect(a + c == c + a, "ring: commutative +", 0, witness);
      out.expect(a * c == c * a, "ring: commutative *", 0, witness);
      out.expect((a + c) + d == a + (c + d), "ring: associative +", 0, witness);
      out.expect((a * c) * d == a * (c * d), "ring: associative *", 0, witness);
      out.expect(a * (c + d) == a * c + a * d, "ring: distributive", 0, witness);
      out.expect((a - a).is_zero() && a + MultiPoly(0) == a, "ring: identities", 0, witness);
      out.expect((a * c).eval_partial(b) == a.eval_partial(b) * c.eval_partial(b),
                 "eval commutes with *", 0, witness);
      out.expect((a + c).eval_partial(b) == a.eval_partial(b) + c.eval_partial(b),
                 "eval commutes with +", 0, witness);
    }
    return out;
  });
}

// ---- identities -------------------------------------------------------------

void add_identities(int n_max, std::vector<Task>& tasks) {
  for (const std::string& id : identity_ids()) {
    for (int n = identity_min_n(id); n <= n_max; ++n) {
      tasks.emplace_back([id, n] {
        Partial out;
        const IdentityReport r = identity_check(id, n);
        out.expect(r.pass, id, n, [&] {
          std::string w = mismatch(r.lhs, r.rhs);
          if (r.first_difference) w += " first difference " + *r.first_difference;
          if (r.witness) w += " witness " + perm_text(*r.witness);
          return w;
        });
        return out;
      });
    }
  }
}

// ---- involutions ------------------------------------------------------------

bool paired(Branch a, Branch b) {
  auto other = [](Branch x) {
    switch (x) {
      case Branch::phi_split: return Branch::phi_merge;
      case Branch::phi_merge: return Branch::phi_split;
      case Branch::psi_case1: return Branch::psi_case2;
      case Branch::psi_case2: return Branch::psi_case1;
      case Branch::varphi_case2: return Branch::varphi_case3;
      case Branch::varphi_case3: return Branch::varphi_case2;
      case Branch::fixed: return Branch::fixed;
    }
    return Branch::fixed;
  };
  return other(a) == b;
}

MultiPoly signed_weight(const Permutation& pi) {
  const StatRecord s = statistics(pi);
  return MultiPoly::monomial(s.cdes % 2 == 0 ? 1 : -1, s.exc);
}

void check_involution(Partial& out, const std::string& name, int n, const Permutation& pi,
                      const InvolutionOutcome& first, const InvolutionOutcome& second) {
  auto witness = [&] { return perm_text(pi) + " -> " + perm_text(first.image); };
  out.expect(second.image == pi, name + ": involution", n, witness);
  out.expect(statistics(first.image).exc == statistics(pi).exc, name + ": exc preserved", n,
             witness);
  const bool fixed = first.image == pi;
  out.expect(fixed == (first.branch == Branch::fixed) && fixed == (first.delta_cdes == 0),
             name + ": fixed iff branch fixed iff delta 0", n, witness);
  if (!fixed) {
    out.expect(first.delta_cdes == 1 || first.delta_cdes == -1, name + ": |delta cdes| = 1", n,
               witness);
    out.expect(paired(first.branch, second.branch), name + ": branch pairing", n, [&] {
      return witness() + " branches " + to_string(first.branch) + "/" +
             to_string(second.branch);
    });
  }
}

void add_involutions(int n_max, std::vector<Task>& tasks) {
  for (int n = 2; n <= n_max; ++n) {
    for (int i = 1; i <= n; ++i) {
      tasks.emplace_back([n, i] {
        Partial out;
        const std::string name = "psi_{" + std::to_string(n) + "," + std::to_string(i) + "}";
        std::vector<Permutation> fixed;
        MultiPoly total;
        for_each_permutation(Family::one_at_i, n, i, [&](std::span<const int> w) {
          const Permutation pi(std::vector<int>(w.begin(), w.end()));
          const InvolutionOutcome first = psi(n, i, pi);
          const InvolutionOutcome second = psi(n, i, first.image);
          check_involution(out, name, n, pi, first, second);
          if (first.image == pi) fixed.push_back(pi);
          total += signed_weight(pi);
          if (const auto q = last_top_descent(pi)) {
            const Permutation img = phi_map(pi).image;
            out.expect(hat(img) == hat(pi) && last_top_descent(img) == q,
                       "phi: hat and q preserved", n, [&] { return perm_text(pi); });
          }
        });
        std::sort(fixed.begin(), fixed.end());
        const std::vector<Permutation> built = psi_fixed_set(n, i);
        out.expect(fixed == built, name + ": fixed set matches direct construction", n,
                   [&] { return std::to_string(fixed.size()) + " vs " + std::to_string(built.size()); });
        const std::size_t want_size = (i == 1 || i == n) ? std::size_t{1} << (n - 2) : 0;
        out.expect(fixed.size() == want_size, name + ": fixed set size", n,
                   [&] { return std::to_string(fixed.size()); });
        MultiPoly fixed_weight;
        for (const Permutation& pi : fixed) fixed_weight += signed_weight(pi);
        const MultiPoly closed = eval(closed_form(ClosedFormVariant::q1, n, i), {{Var::t, 1}});
        out.expect(total == fixed_weight && total == closed, name + ": signed sum collapses", n,
                   [&] { return mismatch(total, closed) + " fixed=" + fixed_weight.to_string(); });
        return out;
      });
      if (i < 2) continue;
      tasks.emplace_back([n, i] {
        Partial out;
        const std::string name = "varphi_{" + std::to_string(n) + "," + std::to_string(i) + "}";
        std::vector<Permutation> fixed;
        MultiPoly total;
        for_each_permutation(Family::derangements_one_at_i, n, i, [&](std::span<const int> w) {
          const Permutation pi(std::vector<int>(w.begin(), w.end()));
          const InvolutionOutcome first = varphi(n, i, pi);
          const InvolutionOutcome second = varphi(n, i, first.image);
          check_involution(out, name, n, pi, first, second);
          if (first.image == pi) fixed.push_back(pi);
          total += signed_weight(pi);
        });
        out.expect(fixed == std::vector<Permutation>{sigma_fixed_point(n, i)},
                   name + ": unique fixed point sigma^i", n,
                   [&] { return std::to_string(fixed.size()) + " fixed points"; });
        const MultiPoly closed = eval(closed_form(ClosedFormVariant::q0, n, i), {{Var::t, 1}});
        out.expect(total == closed, name + ": signed sum collapses", n,
                   [&] { return mismatch(total, closed); });
        return out;
      });
    }
  }
}

// ---- bijections -------------------------------------------------------------

std::string signed_text(const SignedPermutation& sp) { return format_signed_cycles(sp); }

void add_bijections(int n_max, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) {
    tasks.emplace_back([n] {
      Partial out;
      const bool images = n <= kBijectionImageMaxN;
      long long ncdp = 0;
      long long ncdp_der = 0;
      std::set<PerfectMatching> gamma_images;
      std::set<PerfectMatching> gamma_der_images;
      std::set<PerfectMatching> theta_images;
      for_each_negative_cdes(n, SignedFilter::all, [&](const SignedPermutation& sp) {
        ++ncdp;
        const StatRecord st = statistics(sp.perm);
        if (st.fix == 0) ++ncdp_der;
        const PerfectMatching m = gamma(sp);
        const MatchStats ms = match_stats(m);
        auto witness = [&] { return signed_text(sp); };
        out.expect(is_callan(m), "gamma image is Callan", n, witness);
        out.expect(ms.com == st.cyc && ms.ver == st.fix, "com = cyc and ver = fix", n, witness);
        out.expect(gamma_inv(m) == sp, "gamma_inv(gamma(sp)) = sp", n, witness);
        if (st.cyc == 1) {
          const PerfectMatching t = theta(sp);
          out.expect(t == m && is_connected(t), "theta agrees with gamma on cycles", n, witness);
          out.expect(theta_inv(t) == sp, "theta_inv(theta(sp)) = sp", n, witness);
          out.expect(downline_check(sp).holds(), "per-cycle downline count", n, witness);
          if (images) theta_images.insert(t);
        }
        if (images) {
          gamma_images.insert(m);
          if (st.fix == 0) gamma_der_images.insert(m);
        }
      });

      long long callan_all_filter = 0;
      long long callan_nv_all_filter = 0;
      std::set<PerfectMatching> callan;
      std::set<PerfectMatching> callan_nv;
      std::set<PerfectMatching> connected;
      for_each_matching(n, MatchingFilter::all, [&](const PerfectMatching& m) {
        if (!is_callan(m)) return;
        ++callan_all_filter;
        const MatchStats ms = match_stats(m);
        if (ms.ver == 0) ++callan_nv_all_filter;
        out.expect(gamma(gamma_inv(m)) == m, "gamma(gamma_inv(M)) = M", n,
                   [&] { return matching_to_json(m).dump(); });
        if (images) {
          callan.insert(m);
          if (ms.ver == 0) callan_nv.insert(m);
          if (ms.com == 1) connected.insert(m);
        }
      });

      const long long callan_count = count_matchings(n, MatchingFilter::callan);
      const long long callan_nv_count = count_matchings(n, MatchingFilter::callan_no_vertical);
      const BigInt b21 = klazar_count(n);
      const BigInt b20 = derangement_counts(n)[static_cast<std::size_t>(n - 1)];
      auto counts = [&](long long a, long long b, long long c, const BigInt& d) {
        return std::to_string(a) + " / " + std::to_string(b) + " / " + std::to_string(c) +
               " / " + d.str();
      };
      out.expect(ncdp == callan_count && callan_count == callan_all_filter && BigInt(ncdp) == b21,
                 "#ncdp = #Callan = b_n(2,1)", n,
                 [&] { return counts(ncdp, callan_count, callan_all_filter, b21); });
      out.expect(ncdp_der == callan_nv_count && callan_nv_count == callan_nv_all_filter &&
                     BigInt(ncdp_der) == b20,
                 "#ncdp derangements = #Callan without verticals = b_n(2,0)", n,
                 [&] { return counts(ncdp_der, callan_nv_count, callan_nv_all_filter, b20); });
      if (images) {
        out.expect(static_cast<long long>(gamma_images.size()) == ncdp && gamma_images == callan,
                   "gamma is a bijection onto Callan matchings", n);
        out.expect(gamma_der_images == callan_nv,
                   "gamma maps derangements onto Callan matchings without verticals", n);
        out.expect(theta_images == connected,
                   "theta is a bijection onto connected Callan matchings", n);
        out.notes.push_back("n=" + std::to_string(n) + ": image sets " +
                            std::to_string(gamma_images.size()) + " Callan, " +
                            std::to_string(gamma_der_images.size()) + " without verticals, " +
                            std::to_string(theta_images.size()) + " connected");
      }

      const GlobalDownlineReport g = global_downline_report(n);
      std::string note = "n=" + std::to_string(n) + ": global downline statement holds for " +
                         std::to_string(g.holds) + "/" + std::to_string(g.total) +
                         " (cyclic " + std::to_string(g.cyclic_holds) + "/" +
                         std::to_string(g.cyclic_total) + "), " +
                         std::to_string(g.holds_vertical_as_same_row) +
                         " reading a vertical at (1,1) as same-row";
      if (g.first_counterexample) {
        note += "; first counterexample " + signed_text(*g.first_counterexample);
      }
      out.notes.push_back(note);
      return out;
    });
  }
}

// ---- driver -----------------------------------------------------------------

struct SuiteDef {
  std::string name;
  int cap;
  std::function<void(int, const VerificationOptions&, std::vector<Task>&)> add;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"theorem-p", 8, [](int n, const VerificationOptions&, auto& t) { add_theorem_p(n, t); }},
      {"theorem-b", 8, [](int n, const VerificationOptions&, auto& t) { add_theorem_b(n, t); }},
      {"lemmas", 8,
       [](int n, const VerificationOptions& o, auto& t) { add_lemmas(n, o.seed, t); }},
      {"identities", 8,
       [](int n, const VerificationOptions&, auto& t) { add_identities(n, t); }},
      {"involutions", 8,
       [](int n, const VerificationOptions&, auto& t) { add_involutions(n, t); }},
      {"bijections", 7,
       [](int n, const VerificationOptions&, auto& t) { add_bijections(n, t); }},
  };
  return defs;
}

std::vector<Partial> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Partial> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        results[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      results[k].failures.push_back({"exception", 0, e.what()});
    }
  }
  return results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

int suite_cap(std::string_view suite) {
  int all_cap = 0;
  for (const SuiteDef& s : suites()) {
    if (s.name == suite) return s.cap;
    all_cap = std::max(all_cap, s.cap);
  }
  if (suite == "all") return all_cap;
  throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
}

VerificationSummary run_verification(std::string_view suite, int n_max,
                                     const VerificationOptions& options) {
  const int cap = suite_cap(suite);
  if (n_max < 1) throw std::out_of_range("n_max must be at least 1");
  if (n_max > cap) {
    throw std::out_of_range("suite " + std::string(suite) + " is capped at n_max = " +
                            std::to_string(cap) + "; refusing " + std::to_string(n_max));
  }
  VerificationSummary summary;
  summary.suite = std::string(suite);
  summary.n_hi = n_max;

  for (const SuiteDef& def : suites()) {
    if (suite != "all" && def.name != suite) continue;
    std::vector<Task> tasks;
    def.add(std::min(n_max, def.cap), options, tasks);
    for (Partial& p : run_tasks(tasks, options.jobs)) {
      summary.checks_run += p.checks;
      for (VerificationFailure& f : p.failures) {
        if (suite == "all") f.check = def.name + ": " + f.check;
        summary.failures.push_back(std::move(f));
      }
      for (std::string& note : p.notes) {
        summary.notes.push_back(suite == "all" ? def.name + ": " + note : std::move(note));
      }
    }
    if (suite == "all" && n_max > def.cap) {
      summary.notes.push_back(def.name + ": clamped to n_max = " + std::to_string(def.cap));
    }
  }
  return summary;
}

nlohmann::json summary_to_json(const VerificationSummary& s) {
  nlohmann::json failures = nlohmann::json::array();
  for (const VerificationFailure& f : s.failures) {
    failures.push_back({{"check", f.check}, {"n", f.n}, {"witness", f.witness}});
  }
  return {{"suite", s.suite},
          {"n_range", {s.n_lo, s.n_hi}},
          {"checks_run", s.checks_run},
          {"pass", s.pass()},
          {"failures", std::move(failures)},
          {"notes", s.notes}};
}

std::string summary_to_text(const VerificationSummary& s) {
  std::ostringstream out;
  out << "suite " << s.suite << ", n = " << s.n_lo << ".." << s.n_hi << ": " << s.checks_run
      << " checks, " << s.failures.size() << " failures -> " << (s.pass() ? "PASS" : "FAIL")
      << '\n';
  for (const VerificationFailure& f : s.failures) {
    out << "  FAIL [" << f.check << "] n=" << f.n;
    if (!f.witness.empty()) out << ": " << f.witness;
    out << '\n';
  }
  for (const std::string& note : s.notes) out << "  note: " << note << '\n';
  return out.str();
}

}  // namespace cdes
