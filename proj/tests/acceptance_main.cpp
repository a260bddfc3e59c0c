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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>
#include <sstream>
#include <string>
#include <vector>

#include "cdes/bijections.hpp"
#include "cdes/matching.hpp"
#include "cdes/statistics_engine.hpp"
#include "cdes/tables.hpp"
#include "cdes/verification.hpp"

#ifndef CDES_GOLDEN_DIR
#error "CDES_GOLDEN_DIR must be defined"
#endif

namespace {

using namespace cdes;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

MultiPoly at(const MultiPoly& p, std::initializer_list<std::pair<Var, int>> values) {
  Bindings b;
  for (const auto& [v, value] : values) b.set(v, value);
  return p.eval_partial(b);
}

void require_suite(Outcome& out, std::string_view suite, int n_max) {
  const VerificationSummary s = run_verification(suite, n_max);
  if (!s.pass()) {
    const VerificationFailure& f = s.failures.front();
    out.require(false, std::string(suite) + ": " + f.check + " n=" + std::to_string(f.n) + " " +
                           f.witness);
  }
  out.require(s.checks_run > 0, std::string(suite) + ": no checks ran");
}

Outcome criterion1() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    const PolyTable brute = p_brute_table(n, PMode::all);
    const MultiPoly base = (MultiPoly(1) + MultiPoly::variable(Var::x)).pow(n - 2);
    for (int i = 1; i <= n; ++i) {
      MultiPoly want;
      if (i == 1) want = MultiPoly::variable(Var::t) * base;
      if (i == n) want = MultiPoly::variable(Var::t, n) * MultiPoly::variable(Var::x) * base;
      const MultiPoly got = at(brute.at(i), {{Var::y, -1}, {Var::q, 1}});
      out.require(got == want && got == closed_form(ClosedFormVariant::q1, n, i),
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) + " got " + got.to_string());
    }
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    const PolyTable brute = p_brute_table(n, PMode::derangement);
    for (int i = 2; i <= n; ++i) {
      const MultiPoly want = MultiPoly::monomial((n - i) % 2 == 0 ? 1 : -1, i - 1, 0, 0, i);
      const MultiPoly got = at(brute.at(i), {{Var::y, -1}, {Var::q, 0}});
      out.require(got == want && got == closed_form(ClosedFormVariant::q0, n, i),
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) + " got " + got.to_string());
    }
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  require_suite(out, "lemmas", 8);
  return out;
}

Outcome criterion4() {
  Outcome out;
  const std::vector<long long> general = {1, 2, 7, 35, 226, 1787, 16717};
  const std::vector<long long> derangement = {0, 1, 3, 16};
  for (int n = 1; n <= 8; ++n) {
    for (BVariant v : {BVariant::general, BVariant::derangement}) {
      out.require(b_rec(v, n) == b_brute(v, n), "b recurrence vs brute n=" + std::to_string(n));
    }
    const MultiPoly g = at(b_rec(BVariant::general, n), {{Var::y, 2}});
    out.require(g == MultiPoly(klazar_count(n)), "b_n(2,1) vs Klazar n=" + std::to_string(n));
    if (n <= 7) out.require(g == MultiPoly(general[n - 1]), "b_n(2,1) value n=" + std::to_string(n));
    const MultiPoly d = at(b_rec(BVariant::derangement, n), {{Var::y, 2}});
    out.require(d == MultiPoly(derangement_counts(n)[n - 1]),
                "b_n(2,0) vs recurrence n=" + std::to_string(n));
    if (n <= 4) {
      out.require(d == MultiPoly(derangement[n - 1]), "b_n(2,0) value n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    const BigInt ncdp(enumerate_negative_cdes(n, SignedFilter::all).size());
    const BigInt callan(count_matchings(n, MatchingFilter::callan));
    const MultiPoly b21 = at(b_rec(BVariant::general, n), {{Var::y, 2}});
    out.require(ncdp == callan && b21 == MultiPoly(ncdp), "general counts n=" + std::to_string(n));
    const BigInt dncdp(enumerate_negative_cdes(n, SignedFilter::derangement).size());
    const BigInt novert(count_matchings(n, MatchingFilter::callan_no_vertical));
    const MultiPoly b20 = at(b_rec(BVariant::derangement, n), {{Var::y, 2}});
    out.require(dncdp == novert && b20 == MultiPoly(dncdp),
                "derangement counts n=" + std::to_string(n));
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  require_suite(out, "bijections", 7);
  for (int n = 1; n <= 7; ++n) {
    const GlobalDownlineReport r = global_downline_report(n);
    std::printf("  report n=%d: global downline form holds for %lld/%lld (cyclic %lld/%lld)\n", n,
                r.holds, r.total, r.cyclic_holds, r.cyclic_total);
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  require_suite(out, "identities", 8);
  return out;
}

Outcome criterion8() {
  Outcome out;
  require_suite(out, "involutions", 8);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion9() {
  Outcome out;
  const std::string dir = CDES_GOLDEN_DIR;
  for (int i = 1; i <= 4; ++i) {
    const std::string name = "psi_4_" + std::to_string(i) + ".txt";
    const std::string golden = strip_comment_lines(read_file(dir + "/" + name));
    out.require(!golden.empty() && emit_table(TableKind::psi, 4, i) == golden, name);
  }
  const std::string raw = read_file(dir + "/varphi_4.txt");
  out.require(emit_table(TableKind::varphi, 4, std::nullopt) == strip_comment_lines(raw),
              "varphi_4.txt");
  int annotations = 0;
  for (std::size_t p = raw.find("# Anomaly:"); p != std::string::npos;
       p = raw.find("# Anomaly:", p + 1)) {
    ++annotations;
  }
  out.require(annotations == 2, "expected two anomaly annotations in varphi_4.txt");
  return out;
}

Outcome criterion10() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  VerificationOptions opts;
  opts.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const VerificationSummary s = run_verification("all", 8, opts);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const double gib = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
  out.require(s.pass(), "verify all reported failures");
  out.require(secs < 300.0, "verify all exceeded 300 s");
  out.require(gib < 10.0, "peak memory exceeded 10 GiB");
  std::printf("  verify all: %lld checks in %.2f s, peak rss %.3f GiB\n",
              static_cast<long long>(s.checks_run), secs, gib);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "P_{n,i}(x,-1,1,t) closed forms, n<=8", 10, criterion1},
      {2, "derangement P_{n,i}(x,-1,0,t) closed forms, n<=8", 10, criterion2},
      {3, "deletion recurrences equal brute force, n<=8", 30, criterion3},
      {4, "b_n(y,1), b_n(y,0) recurrences and values at y=2", 30, criterion4},
      {5, "signed permutation, Callan matching and b_n(2,q) counts, n<=7", 60, criterion5},
      {6, "gamma/theta bijections, round trips, com/ver, per-cycle downline", 60, criterion6},
      {7, "Brenti and Ksavrelof-Zeng identities, n<=8", 10, criterion7},
      {8, "psi and varphi involutions with fixed sets, n<=8", 60, criterion8},
      {9, "golden tables byte-exact", 10, criterion9},
      {10, "verify all at default caps within time and memory", 300, criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < c.budget_s, "over time budget");
    if (!out.pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                secs, out.pass ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
