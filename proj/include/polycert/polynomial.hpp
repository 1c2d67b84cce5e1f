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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polycert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Index i of coeffs() holds the coefficient of z^i. The representation is
/// canonical: trailing zero coefficients are stripped on construction, so the
/// zero polynomial is the empty sequence and, otherwise, the last coefficient
/// is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  /// Builds a polynomial from decimal coefficient strings a_0..a_n.
  static Polynomial from_strings(std::span<const std::string> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree n; the zero polynomial reports 0 as well, check is_zero() first.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^i, zero beyond the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  const Integer& leading() const;
  const Integer& constant() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Coefficients s_0(m)..s_n(m) of f(m + z), that is s_i(m) = f^(i)(m)/i!.
struct ShiftedCoefficients {
  Polynomial base;
  Integer m;
  std::vector<Integer> s;
};

/// gcd of |coefficients|. Throws ZeroPolynomial.
Integer content(const Polynomial& p);

struct PrimitivePart {
  Integer content;
  Polynomial primitive;
};

/// Splits p = content * primitive with content > 0. Throws ZeroPolynomial.
PrimitivePart primitive_part(const Polynomial& p);

/// h_f = max_{i<n} |a_i| / |a_n| as an exact rational. Throws DegreeTooLow
/// for constants.
Rational height(const Polynomial& p);

/// max_{i<n} |a_i|, the numerator of height() before reduction.
Integer max_lower_abs(const Polynomial& p);

Integer evaluate(const Polynomial& p, const Integer& x);

/// Exact Taylor shift by n-fold synthetic division by (z - m).
ShiftedCoefficients taylor_shift(const Polynomial& p, const Integer& m);

/// z^n p(1/z). Throws ZeroConstantTerm when a_0 = 0.
Polynomial reverse(const Polynomial& p);

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& p, const Integer& c);

/// Canonical text form, ascending powers, e.g. "64+56z^2+14z^4+z^6".
std::string to_string(const Polynomial& p, char var = 'z');

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace polycert
