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

#ifndef CDES_PERMUTATION_HPP
#define CDES_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdes {

/// Thrown for malformed permutation or signed-permutation text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-indexed: `pi(i)` is the image of i.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` contains each of 1..n once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const;
  bool is_derangement() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Disjoint cycles in standard form: each cycle starts with its minimum and
/// cycles are ordered by increasing minima.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::size_t size() const { return cycles.size(); }
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// A sequence of distinct positive integers, not necessarily 1..k.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> entries_;
};

struct StatRecord {
  int exc = 0;
  int fix = 0;
  int cyc = 0;
  int cdes = 0;
  std::vector<int> cdes_set;  // sorted ascending
  int inv1 = 0;               // position of the value 1

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

/// Accepts one-line ("3 1 4 2") or cycle ("(1 3 4 2)(5 7)(6)") notation,
/// with whitespace or commas as separators. Cycle notation must cover 1..n
/// unless `size` is given, in which case omitted points are fixed.
Permutation parse_permutation(std::string_view text, std::optional<int> size = std::nullopt);

CycleDecomposition standard_cycles(const Permutation& pi);

/// Builds the permutation of [n] whose cycles are `cycles`; the cycles may
/// be written in any rotation or order but must partition 1..n.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

StatRecord statistics(const Permutation& pi);

/// Order-isomorphic relabeling of a word onto 1..k.
Permutation red(const Word& w);

/// Rank relabeling of an arbitrary sequence of distinct values.
std::vector<int> rank_relabel(std::span<const int> values);

/// Concatenation of the standard cycles (parentheses erased).
Word hat(const Permutation& pi);

/// "(1 3 4 2)(5 7)(6)" when `compact` is false, "(1342)(57)(6)" when true.
/// Compact output is only unambiguous for n <= 9.
std::string format_cycles(const Permutation& pi, bool compact = false);
std::string format_one_line(const Permutation& pi);

enum class Family {
  all,
  one_at_i,               // pi(i) = 1
  derangements,
  derangements_one_at_i,  // pi(i) = 1, fixed-point free
  derangements_last_is_i  // pi(n) = i, fixed-point free
};

std::optional<Family> family_from_string(std::string_view name);
std::string to_string(Family family);

/// Visits every member of the family in lexicographic order of one-line
/// words. The visitor sees a borrowed word valid only during the call.
/// Throws std::out_of_range when i is required and outside 1..n.
void for_each_permutation(Family family, int n, int i,
                          const std::function<void(std::span<const int>)>& visit);

std::vector<Permutation> enumerate(Family family, int n, int i = 0);

/// Same visit order as `for_each_permutation(Family::all, ...)` restricted
/// to words with word[0] == first. Concatenating prefixes 1..n reproduces
/// the full stream, so this is the unit of parallel partitioning.
void for_each_with_first(int n, int first,
                         const std::function<void(std::span<const int>)>& visit);

/// Allocation-free statistics over a raw one-line word; the same values as
/// `statistics` except that the cdes set is not materialized.
struct FastStats {
  int exc = 0;
  int fix = 0;
  int cyc = 0;
  int cdes = 0;
  int inv1 = 0;
};
FastStats fast_statistics(std::span<const int> word);

}  // namespace cdes

template <>
struct std::hash<cdes::Permutation> {
  std::size_t operator()(const cdes::Permutation& p) const noexcept;
};

#endif  // CDES_PERMUTATION_HPP
