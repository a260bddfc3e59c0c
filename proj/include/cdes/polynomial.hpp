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

#ifndef CDES_POLYNOMIAL_HPP
#define CDES_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdes {

using BigInt = boost::multiprecision::cpp_int;

/// The fixed variable tuple. Canonical strings print them in this order.
enum class Var : int { x = 0, y = 1, q = 2, t = 3 };

using Exponents = std::array<int, 4>;

/// Graded-lexicographic order, largest first: higher total degree wins,
/// ties broken lexicographically on (x, y, q, t).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Partial assignment of integers to variables; unbound variables stay
/// symbolic under substitution.
class Bindings {
 public:
  Bindings() = default;
  Bindings& set(Var v, BigInt value);
  const std::optional<BigInt>& get(Var v) const { return values_[static_cast<int>(v)]; }

 private:
  std::array<std::optional<BigInt>, 4> values_;
};

/// Sparse polynomial in (x, y, q, t) with exact integer coefficients.
/// No zero coefficient is ever stored, so structural equality is
/// mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLexGreater>;

  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const BigInt& constant);

  /// Throws std::invalid_argument on a negative exponent.
  static MultiPoly monomial(const BigInt& coeff, int ex, int ey = 0, int eq = 0, int et = 0);
  static MultiPoly variable(Var v, int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(const Exponents& e) const;
  int degree(Var v) const;

  /// Adds `coeff * monomial(e)` in place.
  void add_term(const Exponents& e, const BigInt& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  MultiPoly pow(unsigned k) const;

  /// Substitutes the bound variables. Uses 0^0 = 1, so binding a variable
  /// to 0 keeps exactly the terms that do not involve it.
  MultiPoly eval_partial(const Bindings& b) const;

  /// Canonical form such as "x^2*y + 2*x - 1"; the zero polynomial is "0".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

std::string to_string(const Exponents& e);  // monomial without coefficient, "1" for constant

enum class ArithOp { add, sub, mul };

MultiPoly mp_monomial(const BigInt& coeff, int ex, int ey, int eq, int et);
MultiPoly mp_arith(ArithOp op, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_eval_partial(const MultiPoly& p, const Bindings& bindings);

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace cdes

#endif  // CDES_POLYNOMIAL_HPP
