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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cdes/bijections.hpp"
#include "cdes/matching.hpp"
#include "cdes/render.hpp"
#include "cdes/serialization.hpp"
#include "cdes/statistics_engine.hpp"
#include "cdes/tables.hpp"
#include "cdes/verification.hpp"

namespace {

using namespace cdes;

constexpr int kSeqRecurrenceMaxN = 20;
constexpr int kSeqEnumerationMaxN = 7;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string load_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

SignedPermutation read_signed(const std::string& text) {
  return looks_like_json(text) ? signed_from_json(parse_json(text)) : parse_signed_cycles(text);
}

void print_matching(const PerfectMatching& m, const std::string& format) {
  if (format == "json") {
    std::cout << matching_to_json(m).dump() << '\n';
    return;
  }
  const Diagram d = format == "svg" ? render_svg(m) : render_text(m);
  if (d.warning) std::cerr << "warning: matching has uplines and is not Callan\n";
  std::cout << d.document;
}

void print_signed(const SignedPermutation& sp, const std::string& format) {
  if (format == "json") {
    std::cout << signed_to_json(sp).dump() << '\n';
  } else if (format == "text") {
    std::cout << format_signed_cycles(sp) << '\n';
  } else {
    throw UsageError("signed permutations print as json or text");
  }
}

int cmd_verify(const std::string& suite, int n_max, bool json, int jobs, std::uint64_t seed) {
  const VerificationSummary s = run_verification(suite, n_max, {jobs, seed});
  if (json) {
    std::cout << summary_to_json(s).dump(2) << '\n';
  } else {
    std::cout << summary_to_text(s);
  }
  return s.pass() ? 0 : 1;
}

int cmd_seq(const std::string& which, int n_max) {
  const int cap = which == "mn" ? kSeqEnumerationMaxN : kSeqRecurrenceMaxN;
  if (n_max < 1 || n_max > cap) {
    throw std::out_of_range("seq " + which + " supports 1 <= n-max <= " + std::to_string(cap));
  }
  std::vector<std::string> values;
  if (which == "b21") {
    for (int n = 1; n <= n_max; ++n) values.push_back(klazar_count(n).str());
  } else if (which == "b20") {
    for (const BigInt& v : derangement_counts(n_max)) values.push_back(v.str());
  } else {
    for (int n = 1; n <= n_max; ++n) {
      values.push_back(std::to_string(count_matchings(n, MatchingFilter::callan)));
    }
  }
  for (std::size_t k = 0; k < values.size(); ++k) std::cout << (k ? " " : "") << values[k];
  std::cout << '\n';
  return 0;
}

int cmd_enum(const std::string& what, int n, const std::string& filter,
             const std::string& format) {
  Json array = Json::array();
  auto emit_matching = [&](const PerfectMatching& m) {
    if (format == "json") {
      array.push_back(matching_to_json(m));
    } else {
      std::string line;
      for (const Edge& e : m.edges()) {
        line += "{(" + std::to_string(e.first.index) + "," + std::to_string(e.first.row) +
                "),(" + std::to_string(e.second.index) + "," + std::to_string(e.second.row) +
                ")}";
      }
      std::cout << line << '\n';
    }
  };
  if (what == "ncdp") {
    SignedFilter f = SignedFilter::all;
    if (filter == "derangement") {
      f = SignedFilter::derangement;
    } else if (!filter.empty() && filter != "all") {
      throw UsageError("ncdp filters: all, derangement");
    }
    for_each_negative_cdes(n, f, [&](const SignedPermutation& sp) {
      if (format == "json") {
        array.push_back(signed_to_json(sp));
      } else {
        std::cout << format_signed_cycles(sp) << '\n';
      }
    });
  } else {
    std::string name = filter.empty() ? (what == "callan" ? "callan" : "all") : filter;
    const auto f = matching_filter_from_string(name);
    if (!f || (what == "callan" && *f == MatchingFilter::all)) {
      throw UsageError("matching filters: all, callan, callan_no_vertical");
    }
    for_each_matching(n, *f, emit_matching);
  }
  if (format == "json") std::cout << array.dump() << '\n';
  return 0;
}

int cmd_map(const std::string& which, const std::string& input, const std::string& format) {
  const std::string text = load_input(input);
  if (which == "gamma" || which == "theta") {
    const SignedPermutation sp = read_signed(text);
    print_matching(which == "gamma" ? gamma(sp) : theta(sp), format);
  } else {
    const PerfectMatching m = matching_from_json(parse_json(text));
    print_signed(which == "gamma-inv" ? gamma_inv(m) : theta_inv(m), format);
  }
  return 0;
}

int cmd_draw(const std::string& input, const std::string& format) {
  const std::string text = load_input(input);
  const PerfectMatching m =
      looks_like_json(text) && parse_json(text).contains("edges")
          ? matching_from_json(parse_json(text))
          : gamma(read_signed(text));
  print_matching(m, format);
  return 0;
}

int cmd_stats(const std::string& perm, std::optional<int> n, bool json) {
  const Permutation pi = parse_permutation(perm, n);
  const Json j = stats_to_json(pi);
  if (json) {
    std::cout << j.dump() << '\n';
    return 0;
  }
  const StatRecord s = statistics(pi);
  std::string cdes_set;
  for (int v : s.cdes_set) cdes_set += (cdes_set.empty() ? "" : ",") + std::to_string(v);
  std::cout << "one-line " << format_one_line(pi) << '\n'
            << "cycles   " << format_cycles(pi) << '\n'
            << "exc " << s.exc << "  fix " << s.fix << "  cyc " << s.cyc << "  cdes " << s.cdes
            << "  CDES {" << cdes_set << "}  inv1 " << s.inv1 << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdes: cycle descents, sign-reversing involutions and Callan matchings"};
  app.require_subcommand(1);
  app.footer(
      "Caps: verify theorem-p/theorem-b/lemmas/identities/involutions n <= 8, bijections n <= 7\n"
      "(image-set equality n <= 6); verify all clamps each suite to its cap; table n <= 8;\n"
      "seq b21/b20 n <= 20, seq mn n <= 7; enum matchings n <= 8, enum ncdp n <= 7.\n"
      "Exit status: 0 success, 1 verification failures, 2 usage or input error.");

  int code = 0;

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  std::string suite;
  int n_max = 0;
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = VerificationOptions{}.seed;
  verify->add_option("suite", suite, "theorem-p|theorem-b|lemmas|identities|involutions|bijections|all")
      ->required();
  verify->add_option("--n-max", n_max, "Largest size checked")->required();
  verify->add_flag("--json", json, "Machine-readable summary");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized polynomial checks");

  auto* table = app.add_subcommand("table", "Print an involution table");
  std::string table_kind;
  int table_n = 0;
  std::optional<int> table_i;
  table->add_option("kind", table_kind, "psi|varphi")->required();
  table->add_option("--n", table_n, "Size")->required();
  table->add_option("--i", table_i, "Index (required for psi)");

  auto* seq = app.add_subcommand("seq", "Print an integer sequence for n = 1..n-max");
  std::string seq_kind;
  int seq_n = 0;
  seq->add_option("which", seq_kind, "b21|b20|mn")
      ->required()
      ->check(CLI::IsMember({"b21", "b20", "mn"}));
  seq->add_option("--n-max", seq_n, "Last index")->required();

  auto* enumerate_cmd = app.add_subcommand("enum", "Enumerate combinatorial objects");
  std::string enum_kind;
  int enum_n = 0;
  std::string enum_filter;
  std::string enum_format = "text";
  enumerate_cmd->add_option("kind", enum_kind, "callan|ncdp|matchings")
      ->required()
      ->check(CLI::IsMember({"callan", "ncdp", "matchings"}));
  enumerate_cmd->add_option("--n", enum_n, "Size")->required();
  enumerate_cmd->add_option("--filter", enum_filter,
                            "matchings: all|callan|callan_no_vertical; ncdp: all|derangement");
  enumerate_cmd->add_option("--format", enum_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* map = app.add_subcommand("map", "Apply a bijection");
  std::string map_kind;
  std::string map_input;
  std::string map_format = "json";
  map->add_option("which", map_kind, "gamma|gamma-inv|theta|theta-inv")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma-inv", "theta", "theta-inv"}));
  map->add_option("--input", map_input,
                  "Signed cycles \"(1+ 6- 3+ 4+)\", JSON, or @file")
      ->required();
  map->add_option("--format", map_format, "json|svg|text")
      ->check(CLI::IsMember({"json", "svg", "text"}));

  auto* draw = app.add_subcommand("draw", "Render a matching (signed permutations go through gamma)");
  std::string draw_input;
  std::string draw_format = "svg";
  draw->add_option("--input", draw_input, "Matching JSON, signed cycles, or @file")->required();
  draw->add_option("--format", draw_format, "svg|text")->check(CLI::IsMember({"svg", "text"}));

  auto* stats = app.add_subcommand("stats", "Statistics of a permutation");
  std::string stats_perm;
  std::optional<int> stats_n;
  bool stats_json = false;
  stats->add_option("--perm", stats_perm, "One-line \"3 1 4 2\" or cycles \"(1 3 4)(2)\"")
      ->required();
  stats->add_option("--n", stats_n, "Size, padding cycle notation with fixed points");
  stats->add_flag("--json", stats_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      code = cmd_verify(suite, n_max, json, jobs, seed);
    } else if (*table) {
      const auto kind = table_kind_from_string(table_kind);
      if (!kind) throw UsageError("table kinds: psi, varphi");
      std::cout << emit_table(*kind, table_n, table_i);
    } else if (*seq) {
      code = cmd_seq(seq_kind, seq_n);
    } else if (*enumerate_cmd) {
      code = cmd_enum(enum_kind, enum_n, enum_filter, enum_format);
    } else if (*map) {
      code = cmd_map(map_kind, map_input, map_format);
    } else if (*draw) {
      code = cmd_draw(draw_input, draw_format);
    } else if (*stats) {
      code = cmd_stats(stats_perm, stats_n, stats_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
