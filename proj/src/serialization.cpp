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

#include "cdes/serialization.hpp"

#include <algorithm>
#include <cctype>

namespace cdes {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

MVertex vertex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("vertex must be [index, row]");
  const int row = as_int(j[1], "row");
  if (row != 0 && row != 1) throw ParseError("row must be 0 or 1");
  return {as_int(j[0], "index"), row};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json matching_to_json(const PerfectMatching& m) {
  Json edges = Json::array();
  for (const Edge& e : m.edges()) {
    edges.push_back({{e.first.index, e.first.row}, {e.second.index, e.second.row}});
  }
  return {{"support", m.support()}, {"edges", std::move(edges)}};
}

PerfectMatching matching_from_json(const Json& j) {
  const Json& support_j = field(j, "support");
  const Json& edges_j = field(j, "edges");
  if (!support_j.is_array() || !edges_j.is_array()) {
    throw ParseError("support and edges must be arrays");
  }
  std::vector<int> support;
  for (const Json& v : support_j) support.push_back(as_int(v, "support element"));
  std::vector<Edge> edges;
  for (const Json& e : edges_j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertices");
    edges.push_back(Edge::make(vertex_from_json(e[0]), vertex_from_json(e[1])));
  }
  return mk_matching(std::move(support), std::move(edges));
}

Json signed_to_json(const SignedPermutation& sp) {
  const auto w = sp.perm.word();
  return {{"n", sp.size()}, {"one_line", std::vector<int>(w.begin(), w.end())}, {"neg", sp.neg}};
}

SignedPermutation signed_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& line = field(j, "one_line");
  if (!line.is_array()) throw ParseError("one_line must be an array");
  std::vector<int> word;
  for (const Json& v : line) word.push_back(as_int(v, "one_line entry"));
  if (static_cast<int>(word.size()) != n) throw ParseError("one_line length differs from n");
  std::vector<int> neg;
  if (j.contains("neg")) {
    for (const Json& v : j.at("neg")) neg.push_back(as_int(v, "neg entry"));
  }
  return make_signed(Permutation(std::move(word)), std::move(neg));
}

SignedPermutation parse_signed_cycles(std::string_view text, std::optional<int> size) {
  std::string plain;
  std::vector<int> neg;
  std::size_t p = 0;
  while (p < text.size()) {
    const char c = text[p];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = p;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      const std::string_view digits = text.substr(p, end - p);
      if (end < text.size() && (text[end] == '+' || text[end] == '-')) {
        if (text[end] == '-') neg.push_back(std::stoi(std::string(digits)));
        ++end;
      }
      plain.append(digits);
      plain.push_back(' ');
      p = end;
    } else if (c == '+' || c == '-') {
      throw ParseError("sign must directly follow a number");
    } else {
      plain.push_back(c == ',' ? ' ' : c);
      ++p;
    }
  }
  if (plain.find('(') == std::string::npos) {
    throw ParseError("signed permutations must be written in cycle notation");
  }
  return make_signed(parse_permutation(plain, size), std::move(neg));
}

std::string format_signed_cycles(const SignedPermutation& sp) {
  std::string out;
  for (const auto& cycle : standard_cycles(sp.perm).cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cycle[k]);
      out += sp.is_negative(cycle[k]) ? '-' : '+';
    }
    out += ')';
  }
  return out;
}

Json stats_to_json(const Permutation& pi) {
  const StatRecord s = statistics(pi);
  const auto w = pi.word();
  return {{"one_line", std::vector<int>(w.begin(), w.end())},
          {"cycles", format_cycles(pi)},
          {"exc", s.exc},
          {"fix", s.fix},
          {"cyc", s.cyc},
          {"cdes", s.cdes},
          {"cdes_set", s.cdes_set},
          {"inv1", s.inv1}};
}

}  // namespace cdes
