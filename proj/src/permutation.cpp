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

#include "cdes/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cdes {

namespace {

void require_permutation_word(const std::vector<int>& word) {
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v) + " in permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Recursive-descent scanner for the cycle/one-line grammar.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  // Separators are whitespace or a single comma.
  void skip_separator() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
  }
  bool at_integer() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
  }
  int integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (negative || value == 0) {
      throw ParseError("permutation values must be positive, got " +
                       std::string(negative ? "-" : "") + std::to_string(value));
    }
    return static_cast<int>(value);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_coverage(const std::vector<int>& values, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values) {
    if (v > n) {
      throw ParseError("value " + std::to_string(v) + " exceeds size " + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("duplicate element " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw ParseError("gap in coverage: " + std::to_string(v) + " missing from 1.." +
                       std::to_string(n));
    }
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  require_permutation_word(word_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_derangement() const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == static_cast<int>(i + 1)) return false;
  }
  return true;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("word entries must be distinct");
  }
  if (!sorted.empty() && sorted.front() < 1) {
    throw std::invalid_argument("word entries must be positive");
  }
}

Permutation parse_permutation(std::string_view text, std::optional<int> size) {
  Scanner scan(text);
  if (scan.at_end()) throw ParseError("empty permutation text");

  if (scan.peek() != '(') {
    std::vector<int> values;
    while (!scan.at_end()) {
      values.push_back(scan.integer());
      scan.skip_separator();
      if (!scan.at_end() && !scan.at_integer()) scan.fail("unexpected character");
    }
    const int n = static_cast<int>(values.size());
    if (size && *size != n) {
      throw ParseError("one-line word has length " + std::to_string(n) + ", expected " +
                       std::to_string(*size));
    }
    check_coverage(values, n);
    return Permutation(std::move(values));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<int> all;
  while (!scan.at_end()) {
    scan.expect('(');
    std::vector<int> cycle;
    cycle.push_back(scan.integer());
    for (;;) {
      scan.skip_separator();
      if (scan.peek() == ')') break;
      if (!scan.at_integer()) scan.fail("malformed cycle");
      cycle.push_back(scan.integer());
    }
    scan.expect(')');
    all.insert(all.end(), cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  int n = size.value_or(all.empty() ? 0 : *std::max_element(all.begin(), all.end()));
  if (size) {
    // Omitted points are fixed; only duplicates and range are checked here.
    std::vector<int> padded = all;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : all) {
      if (v <= n) seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        padded.push_back(v);
        cycles.push_back({v});
      }
    }
    check_coverage(padded, n);
  } else {
    check_coverage(all, n);
  }
  return from_cycles(n, cycles);
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    if (c.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t j = 0; j < c.size(); ++j) {
      int from = c[j];
      int to = c[(j + 1) % c.size()];
      if (from < 1 || from > n) {
        throw std::invalid_argument("cycle element " + std::to_string(from) + " outside 1.." +
                                    std::to_string(n));
      }
      if (w[static_cast<std::size_t>(from - 1)] != 0) {
        throw std::invalid_argument("element " + std::to_string(from) +
                                    " appears in two cycles");
      }
      w[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (w[static_cast<std::size_t>(i)] == 0) {
      throw std::invalid_argument("cycles do not cover " + std::to_string(i + 1));
    }
  }
  return Permutation(std::move(w));
}

CycleDecomposition standard_cycles(const Permutation& pi) {
  const int n = pi.size();
  CycleDecomposition out;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    // Scanning starts in increasing order, so `start` is the cycle minimum.
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = pi(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

StatRecord statistics(const Permutation& pi) {
  StatRecord r;
  const int n = pi.size();
  for (int i = 1; i <= n; ++i) {
    if (pi(i) > i) ++r.exc;
    if (pi(i) == i) ++r.fix;
    if (pi(i) == 1) r.inv1 = i;
  }
  const auto dec = standard_cycles(pi);
  r.cyc = static_cast<int>(dec.cycles.size());
  for (const auto& c : dec.cycles) {
    // Interior positions only: 1 < j < length (1-indexed).
    for (std::size_t j = 1; j + 1 < c.size(); ++j) {
      if (c[j] > c[j + 1]) r.cdes_set.push_back(c[j]);
    }
  }
  std::sort(r.cdes_set.begin(), r.cdes_set.end());
  r.cdes = static_cast<int>(r.cdes_set.size());
  return r;
}

FastStats fast_statistics(std::span<const int> word) {
  FastStats r;
  const int n = static_cast<int>(word.size());
  unsigned long long seen = 0;  // n <= 64 on this path
  for (int i = 1; i <= n; ++i) {
    const int v = word[static_cast<std::size_t>(i - 1)];
    r.exc += v > i;
    r.fix += v == i;
    if (v == 1) r.inv1 = i;
  }
  for (int start = 1; start <= n; ++start) {
    if (seen >> start & 1ULL) continue;
    ++r.cyc;
    // Walk c_1 = start, c_2, ...; compare c_j > c_{j+1} for interior j.
    int prev = start;
    int cur = word[static_cast<std::size_t>(start - 1)];
    seen |= 1ULL << start;
    bool interior = false;  // becomes true once prev is at position >= 2
    while (cur != start) {
      seen |= 1ULL << cur;
      if (interior && prev > cur) ++r.cdes;
      interior = true;
      prev = cur;
      cur = word[static_cast<std::size_t>(cur - 1)];
    }
  }
  return r;
}

std::vector<int> rank_relabel(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                   sorted.begin()) +
                  1);
  }
  return out;
}

Permutation red(const Word& w) { return Permutation(rank_relabel(w.entries())); }

Word hat(const Permutation& pi) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(pi.size()));
  for (const auto& c : standard_cycles(pi).cycles) flat.insert(flat.end(), c.begin(), c.end());
  return Word(std::move(flat));
}

std::string format_cycles(const Permutation& pi, bool compact) {
  std::string out;
  for (const auto& c : standard_cycles(pi).cycles) {
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j > 0 && !compact) out += ' ';
      out += std::to_string(c[j]);
    }
    out += ')';
  }
  return out;
}

std::string format_one_line(const Permutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(pi(i));
  }
  return out;
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "all") return Family::all;
  if (name == "one_at_i") return Family::one_at_i;
  if (name == "derangements") return Family::derangements;
  if (name == "derangements_one_at_i") return Family::derangements_one_at_i;
  if (name == "derangements_last_is_i") return Family::derangements_last_is_i;
  return std::nullopt;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::all: return "all";
    case Family::one_at_i: return "one_at_i";
    case Family::derangements: return "derangements";
    case Family::derangements_one_at_i: return "derangements_one_at_i";
    case Family::derangements_last_is_i: return "derangements_last_is_i";
  }
  return "?";
}

namespace {

bool fixed_point_free(std::span<const int> w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == static_cast<int>(k + 1)) return false;
  }
  return true;
}

// Lexicographic enumeration of words with position `pinned` (1-indexed)
// holding `value`; the remaining positions run through the other values in
// lexicographic order, which is lexicographic order of the full word.
void for_each_pinned(int n, int pinned, int value, bool derangement_only,
                     const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != value) rest.push_back(v);
  }
  std::vector<int> word(static_cast<std::size_t>(n));
  do {
    std::size_t r = 0;
    for (int pos = 1; pos <= n; ++pos) {
      word[static_cast<std::size_t>(pos - 1)] = pos == pinned ? value : rest[r++];
    }
    if (!derangement_only || fixed_point_free(word)) visit(word);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

void for_each_permutation(Family family, int n, int i,
                          const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::out_of_range("negative size");
  const bool needs_index = family == Family::one_at_i ||
                           family == Family::derangements_one_at_i ||
                           family == Family::derangements_last_is_i;
  if (needs_index && n == 0) throw std::out_of_range("family requires n >= 1");
  if (needs_index && (i < 1 || i > n)) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  switch (family) {
    case Family::all:
    case Family::derangements: {
      std::vector<int> word(static_cast<std::size_t>(n));
      std::iota(word.begin(), word.end(), 1);
      const bool der = family == Family::derangements;
      do {
        if (!der || fixed_point_free(word)) visit(word);
      } while (std::next_permutation(word.begin(), word.end()));
      return;
    }
    case Family::one_at_i:
      for_each_pinned(n, i, 1, false, visit);
      return;
    case Family::derangements_one_at_i:
      if (i == 1) return;  // pi(1) = 1 is a fixed point
      for_each_pinned(n, i, 1, true, visit);
      return;
    case Family::derangements_last_is_i:
      for_each_pinned(n, n, i, true, visit);
      return;
  }
}

void for_each_with_first(int n, int first,
                         const std::function<void(std::span<const int>)>& visit) {
  if (first < 1 || first > n) throw std::out_of_range("first value outside 1..n");
  for_each_pinned(n, 1, first, false, visit);
}

std::vector<Permutation> enumerate(Family family, int n, int i) {
  std::vector<Permutation> out;
  for_each_permutation(family, n, i, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

}  // namespace cdes

std::size_t std::hash<cdes::Permutation>::operator()(const cdes::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}
