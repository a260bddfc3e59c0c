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

#include "cdes/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cdes {

namespace {

std::string vertex_text(MVertex v) {
  return "(" + std::to_string(v.index) + "," + std::to_string(v.row) + ")";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      a = parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Component label (the smallest support position in it) per support position.
std::vector<int> component_labels(const PerfectMatching& m) {
  const auto& support = m.support();
  UnionFind uf(support.size());
  auto pos = [&](int index) {
    return static_cast<int>(std::lower_bound(support.begin(), support.end(), index) -
                            support.begin());
  };
  for (const Edge& e : m.edges()) uf.unite(pos(e.first.index), pos(e.second.index));
  std::vector<int> labels(support.size());
  for (std::size_t p = 0; p < support.size(); ++p) labels[p] = uf.find(static_cast<int>(p));
  return labels;
}

class MatchingWalker {
 public:
  MatchingWalker(int n, MatchingFilter filter) : n_(n), filter_(filter), used_(2 * n, false) {}

  template <typename Leaf>
  void run(Leaf&& leaf) {
    step(leaf);
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  static MVertex vertex(int id) { return {id / 2 + 1, id % 2}; }

  bool allowed(MVertex u, MVertex w) const {
    if (filter_ == MatchingFilter::all) return true;
    const EdgeClass c = edge_class(Edge::make(u, w));
    if (c == EdgeClass::upline) return false;
    return !(filter_ == MatchingFilter::callan_no_vertical && c == EdgeClass::vertical);
  }

  template <typename Leaf>
  void step(Leaf& leaf) {
    int u = 0;
    while (u < 2 * n_ && used_[static_cast<std::size_t>(u)]) ++u;
    if (u == 2 * n_) {
      leaf();
      return;
    }
    used_[static_cast<std::size_t>(u)] = true;
    for (int w = u + 1; w < 2 * n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || !allowed(vertex(u), vertex(w))) continue;
      used_[static_cast<std::size_t>(w)] = true;
      edges_.push_back(Edge::make(vertex(u), vertex(w)));
      step(leaf);
      edges_.pop_back();
      used_[static_cast<std::size_t>(w)] = false;
    }
    used_[static_cast<std::size_t>(u)] = false;
  }

  int n_;
  MatchingFilter filter_;
  std::vector<bool> used_;
  std::vector<Edge> edges_;
};

void check_enum_size(int n) {
  if (n < 0 || n > kMatchingEnumMaxN) {
    throw std::out_of_range("matching enumeration supports 0 <= n <= " +
                            std::to_string(kMatchingEnumMaxN));
  }
}

}  // namespace

Edge Edge::make(MVertex a, MVertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::arc: return "arc";
    case EdgeClass::upline: return "upline";
    case EdgeClass::downline: return "downline";
    case EdgeClass::vertical: return "vertical";
  }
  return "?";
}

EdgeClass edge_class(const Edge& e) {
  if (e.first.row == e.second.row) return EdgeClass::arc;
  const MVertex bottom = e.first.row == 0 ? e.first : e.second;
  const MVertex top = e.first.row == 0 ? e.second : e.first;
  if (bottom.index == top.index) return EdgeClass::vertical;
  return bottom.index < top.index ? EdgeClass::upline : EdgeClass::downline;
}

MVertex PerfectMatching::partner(MVertex v) const {
  for (const Edge& e : edges_) {
    if (e.first == v) return e.second;
    if (e.second == v) return e.first;
  }
  throw std::out_of_range("vertex " + vertex_text(v) + " is not in the matching");
}

PerfectMatching mk_matching(std::vector<int> support, std::vector<Edge> edges) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw std::invalid_argument("support contains a repeated element");
  }
  std::map<MVertex, int> cover;
  for (int a : support) {
    cover[{a, 0}] = 0;
    cover[{a, 1}] = 0;
  }
  for (Edge& e : edges) {
    e = Edge::make(e.first, e.second);
    if (e.first == e.second) {
      throw std::invalid_argument("vertex " + vertex_text(e.first) + " is paired with itself");
    }
    for (MVertex v : {e.first, e.second}) {
      auto it = cover.find(v);
      if (it == cover.end()) {
        throw std::invalid_argument("vertex " + vertex_text(v) + " is outside A x {0,1}");
      }
      if (++it->second > 1) {
        throw std::invalid_argument("vertex " + vertex_text(v) + " is covered twice");
      }
    }
  }
  for (const auto& [v, count] : cover) {
    if (count == 0) throw std::invalid_argument("vertex " + vertex_text(v) + " is uncovered");
  }
  std::sort(edges.begin(), edges.end());
  PerfectMatching m;
  m.support_ = std::move(support);
  m.edges_ = std::move(edges);
  return m;
}

PerfectMatching mk_matching(int n, std::vector<Edge> edges) {
  std::vector<int> support(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(support.begin(), support.end(), 1);
  return mk_matching(std::move(support), std::move(edges));
}

MatchStats match_stats(const PerfectMatching& m) {
  MatchStats s;
  for (const Edge& e : m.edges()) {
    switch (edge_class(e)) {
      case EdgeClass::arc: ++s.arc; break;
      case EdgeClass::upline: ++s.up; break;
      case EdgeClass::downline: ++s.down; break;
      case EdgeClass::vertical: ++s.ver; break;
    }
  }
  const std::vector<int> labels = component_labels(m);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p] == static_cast<int>(p)) ++s.com;
  }
  return s;
}

bool is_callan(const PerfectMatching& m) {
  return std::none_of(m.edges().begin(), m.edges().end(),
                      [](const Edge& e) { return edge_class(e) == EdgeClass::upline; });
}

bool is_connected(const PerfectMatching& m) { return match_stats(m).com == 1; }

std::vector<PerfectMatching> components(const PerfectMatching& m) {
  const std::vector<int> labels = component_labels(m);
  const auto& support = m.support();
  std::map<int, std::pair<std::vector<int>, std::vector<Edge>>> groups;
  for (std::size_t p = 0; p < support.size(); ++p) {
    groups[labels[p]].first.push_back(support[p]);
  }
  for (const Edge& e : m.edges()) {
    const auto p = std::lower_bound(support.begin(), support.end(), e.first.index) -
                   support.begin();
    groups[labels[static_cast<std::size_t>(p)]].second.push_back(e);
  }
  std::vector<PerfectMatching> out;
  for (auto& [label, group] : groups) {
    out.push_back(mk_matching(std::move(group.first), std::move(group.second)));
  }
  return out;
}

std::optional<MatchingFilter> matching_filter_from_string(std::string_view name) {
  if (name == "all") return MatchingFilter::all;
  if (name == "callan") return MatchingFilter::callan;
  if (name == "callan_no_vertical" || name == "callan-no-vertical") {
    return MatchingFilter::callan_no_vertical;
  }
  return std::nullopt;
}

std::string to_string(MatchingFilter f) {
  switch (f) {
    case MatchingFilter::all: return "all";
    case MatchingFilter::callan: return "callan";
    case MatchingFilter::callan_no_vertical: return "callan_no_vertical";
  }
  return "?";
}

void for_each_matching(int n, MatchingFilter filter,
                       const std::function<void(const PerfectMatching&)>& visit) {
  check_enum_size(n);
  MatchingWalker walker(n, filter);
  walker.run([&] { visit(mk_matching(n, walker.edges())); });
}

std::vector<PerfectMatching> enumerate_matchings(int n, MatchingFilter filter) {
  std::vector<PerfectMatching> out;
  for_each_matching(n, filter, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

long long count_matchings(int n, MatchingFilter filter) {
  check_enum_size(n);
  long long count = 0;
  MatchingWalker walker(n, filter);
  walker.run([&] { ++count; });
  return count;
}

}  // namespace cdes
