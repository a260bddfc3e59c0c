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

#ifndef CDES_MATCHING_HPP
#define CDES_MATCHING_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdes {

// Perfect matchings of P_A = A x {0, 1}. Row 0 is the bottom row.

struct MVertex {
  int index = 0;
  int row = 0;

  friend bool operator==(const MVertex&, const MVertex&) = default;
  friend auto operator<=>(const MVertex&, const MVertex&) = default;
};

/// An unordered pair stored with first < second.
struct Edge {
  MVertex first;
  MVertex second;

  static Edge make(MVertex a, MVertex b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeClass { arc, upline, downline, vertical };

std::string to_string(EdgeClass c);

EdgeClass edge_class(const Edge& e);

class PerfectMatching {
 public:
  PerfectMatching() = default;

  const std::vector<int>& support() const { return support_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(support_.size()); }

  /// The vertex paired with v. Throws std::out_of_range if v is not covered.
  MVertex partner(MVertex v) const;

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  friend PerfectMatching mk_matching(std::vector<int> support, std::vector<Edge> edges);
  std::vector<int> support_;  // ascending
  std::vector<Edge> edges_;   // ascending
};

/// Validates and canonicalizes. Throws std::invalid_argument on a vertex
/// outside A x {0,1}, a vertex covered twice, an uncovered vertex, or a
/// repeated support element.
PerfectMatching mk_matching(std::vector<int> support, std::vector<Edge> edges);

/// Convenience: support {1..n}.
PerfectMatching mk_matching(int n, std::vector<Edge> edges);

struct MatchStats {
  int arc = 0;
  int up = 0;
  int down = 0;
  int ver = 0;
  int com = 0;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

MatchStats match_stats(const PerfectMatching& m);

bool is_callan(const PerfectMatching& m);
bool is_connected(const PerfectMatching& m);

/// Induced sub-matchings on the connected components of G(M), ordered by
/// their smallest support element.
std::vector<PerfectMatching> components(const PerfectMatching& m);

enum class MatchingFilter { all, callan, callan_no_vertical };

std::optional<MatchingFilter> matching_filter_from_string(std::string_view name);
std::string to_string(MatchingFilter f);

inline constexpr int kMatchingEnumMaxN = 8;

/// Perfect matchings of P_n passing `filter`, each exactly once, generated
/// by pairing the smallest free vertex first. Requires 0 <= n <= 8.
void for_each_matching(int n, MatchingFilter filter,
                       const std::function<void(const PerfectMatching&)>& visit);

std::vector<PerfectMatching> enumerate_matchings(int n, MatchingFilter filter);

/// Count only; avoids building matchings.
long long count_matchings(int n, MatchingFilter filter);

}  // namespace cdes

#endif  // CDES_MATCHING_HPP
