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

#include "cdes/polynomial.hpp"

#include <stdexcept>

namespace cdes {

namespace {

constexpr std::array<const char*, 4> kVarNames = {"x", "y", "q", "t"};

int total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Bindings& Bindings::set(Var v, BigInt value) {
  values_[static_cast<int>(v)] = std::move(value);
  return *this;
}

MultiPoly::MultiPoly(long long constant) : MultiPoly(BigInt(constant)) {}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0, 0, 0}, constant);
}

MultiPoly MultiPoly::monomial(const BigInt& coeff, int ex, int ey, int eq, int et) {
  if (ex < 0 || ey < 0 || eq < 0 || et < 0) {
    throw std::invalid_argument("negative exponent in monomial");
  }
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(Exponents{ex, ey, eq, et}, coeff);
  return p;
}

MultiPoly MultiPoly::variable(Var v, int power) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(1, e[0], e[1], e[2], e[3]);
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::eval_partial(const Bindings& b) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    BigInt coeff = c;
    Exponents rest = e;
    for (int v = 0; v < 4; ++v) {
      const auto& value = b.get(static_cast<Var>(v));
      if (!value) continue;
      if (e[v] > 0) coeff *= boost::multiprecision::pow(*value, static_cast<unsigned>(e[v]));
      rest[v] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

std::string to_string(const Exponents& e) {
  std::string out;
  for (int v = 0; v < 4; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = total_degree(e) == 0;
    if (constant) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + '*';
      out += cdes::to_string(e);
    }
  }
  return out;
}

MultiPoly mp_monomial(const BigInt& coeff, int ex, int ey, int eq, int et) {
  return MultiPoly::monomial(coeff, ex, ey, eq, et);
}

MultiPoly mp_arith(ArithOp op, const MultiPoly& a, const MultiPoly& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

MultiPoly mp_eval_partial(const MultiPoly& p, const Bindings& bindings) {
  return p.eval_partial(bindings);
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

}  // namespace cdes
