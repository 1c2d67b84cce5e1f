/* Copyright 2026 The polycert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "polycert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "polycert/error.hpp"

namespace polycert {

namespace {

void strip(std::vector<Integer>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void require_nonzero(const Polynomial& p, const char* what) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, what);
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip(coeffs_);
}

Polynomial Polynomial::from_strings(std::span<const std::string> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    Integer v;
    if (v.set_str(s, 10) != 0) throw Error(ErrorCode::Malformed, "bad integer '" + s + "'");
    c.push_back(std::move(v));
  }
  return Polynomial(std::move(c));
}

const Integer& Polynomial::leading() const {
  require_nonzero(*this, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Integer& Polynomial::constant() const {
  require_nonzero(*this, "constant term of zero polynomial");
  return coeffs_.front();
}

Integer content(const Polynomial& p) {
  require_nonzero(p, "content");
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PrimitivePart primitive_part(const Polynomial& p) {
  Integer c = content(p);
  if (c == 1) return {c, p};
  std::vector<Integer> q;
  q.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    q.push_back(std::move(r));
  }
  return {c, Polynomial(std::move(q))};
}

Integer max_lower_abs(const Polynomial& p) {
  require_nonzero(p, "height");
  if (p.degree() == 0) throw Error(ErrorCode::DegreeTooLow, "height of a constant");
  Integer h = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (mpz_cmpabs(p.coeffs()[i].get_mpz_t(), h.get_mpz_t()) > 0) h = abs(p.coeffs()[i]);
  }
  return h;
}

Rational height(const Polynomial& p) {
  Rational h(max_lower_abs(p), abs(p.leading()));
  h.canonicalize();
  return h;
}

Integer evaluate(const Polynomial& p, const Integer& x) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ShiftedCoefficients taylor_shift(const Polynomial& p, const Integer& m) {
  require_nonzero(p, "taylor_shift");
  // Each synthetic division by (z - m) peels off the next coefficient of
  // f(m + z) as the remainder.
  std::vector<Integer> work = p.coeffs();
  const std::size_t n = p.degree();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = n; k-- > i;) work[k] += m * work[k + 1];
  }
  return {p, m, std::move(work)};
}

Polynomial reverse(const Polynomial& p) {
  require_nonzero(p, "reverse");
  if (sgn(p.constant()) == 0) throw Error(ErrorCode::ZeroConstantTerm, "reverse would drop degree");
  std::vector<Integer> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial(std::move(c));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, const Integer& c) {
  std::vector<Integer> r = p.coeffs();
  for (auto& a : r) a *= c;
  return Polynomial(std::move(r));
}

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Integer& a = p.coeffs()[i];
    if (sgn(a) == 0) continue;
    if (sgn(a) < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    Integer mag = abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace polycert
