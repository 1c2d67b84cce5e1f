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

// Certificate replay. Deliberately shares no code with criteria.cpp: the
// shift uses the binomial expansion, the dominance sum runs over rationals
// and the root radius comes from a bisection.

#include <algorithm>
#include <numeric>
#include <variant>

#include "polycert/certify.hpp"
#include "polycert/error.hpp"

namespace polycert {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

struct Failure {
  std::string name;
};

void expect(bool ok, const char* name) {
  if (!ok) throw Failure{name};
}

Integer power(const Integer& b, std::uint64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// s_i = sum_{k>=i} C(k, i) a_k m^(k-i).
std::vector<Integer> binomial_shift(const std::vector<Integer>& a, const Integer& m) {
  const std::size_t n = a.size() - 1;
  std::vector<Integer> m_pow(n + 1);
  m_pow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) m_pow[i] = m_pow[i - 1] * m;
  std::vector<Integer> s(n + 1, 0);
  Integer binom;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = i; k <= n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), k, i);
      s[i] += binom * a[k] * m_pow[k - i];
    }
  }
  return s;
}

// v_p(x), or nullopt for x = 0.
std::optional<std::uint64_t> val(const Integer& x, const Integer& p) {
  if (sgn(x) == 0) return std::nullopt;
  Integer r = abs(x);
  std::uint64_t e = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    r /= p;
    ++e;
  }
  return e;
}

// Conditions on one index j, c_t read from the bottom or the top.
enum class JCheck { Ok, ValuationNonzero, Gcd, Slope };

JCheck check_j(const std::vector<Integer>& s, const Integer& p, std::uint64_t k, std::size_t j, bool from_top) {
  const std::size_t n = s.size() - 1;
  auto at = [&](std::size_t t) -> const Integer& { return from_top ? s[n - t] : s[t]; };
  if (val(at(j), p) != std::optional<std::uint64_t>(0)) return JCheck::ValuationNonzero;
  if (std::gcd(k, static_cast<std::uint64_t>(j)) != 1) return JCheck::Gcd;
  for (std::size_t t = 1; t < j; ++t) {
    const auto v = val(at(t), p);
    if (!v) continue;
    // k / j < v / (j - t)
    if (!(to_integer(k) * to_integer(j - t) < to_integer(*v) * to_integer(j))) return JCheck::Slope;
  }
  return JCheck::Ok;
}

void check_prime(const Integer& p, const char* name) { expect(p >= 2 && is_prime(p), name); }

// Every prime must have a minimal valid j and the recorded primes must
// reassemble `value`.
void check_prime_list(const std::vector<PrimeEntry>& primes, const Integer& value) {
  Integer product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    check_prime(primes[i].p, "not_prime");
    if (i > 0) expect(primes[i - 1].p < primes[i].p, "prime_order");
    expect(primes[i].k >= 1, "product");
    product *= power(primes[i].p, primes[i].k);
  }
  expect(product == abs(value), "product");
}

void check_j_indices(const std::vector<PrimeEntry>& primes, const std::vector<Integer>& s, bool from_top) {
  const std::size_t n = s.size() - 1;
  for (const auto& e : primes) {
    expect(e.j >= 1 && e.j <= n, "j_range");
    switch (check_j(s, e.p, e.k, e.j, from_top)) {
      case JCheck::ValuationNonzero: throw Failure{"valuation_nonzero"};
      case JCheck::Gcd: throw Failure{"gcd(k,j)"};
      case JCheck::Slope: throw Failure{"slope_condition"};
      case JCheck::Ok: break;
    }
    for (std::size_t j = 1; j < e.j; ++j) expect(check_j(s, e.p, e.k, j, from_top) != JCheck::Ok, "j_not_minimal");
  }
}

void check_q(const std::optional<Integer>& q, const Integer& s0, const Integer& sn) {
  const Integer& qq = *q;
  check_prime(qq, "q_not_prime");
  expect(mpz_divisible_p(s0.get_mpz_t(), qq.get_mpz_t()) != 0, "q_divides");
  Integer smallest;
  try {
    smallest = smallest_prime_factor(s0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    throw Failure{"q_not_smallest"};
  }
  expect(smallest == qq, "q_not_smallest");
  expect(abs(s0) / qq <= abs(sn), "q_condition");
}

// m >= h_f + 2.
void check_m_bound(const Polynomial& f, const Integer& m) {
  Integer big = 0;
  for (std::size_t i = 0; i < f.degree(); ++i) big = std::max(big, Integer(abs(f.coeffs()[i])));
  expect((m - 2) * abs(f.leading()) >= big, "m_bound");
}

// (m - 1 - h_f)^delta >= d, over the rationals.
void check_root_bound(const Polynomial& f, const Integer& m, std::uint64_t delta, const Integer& d) {
  Rational h = 0;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    Rational r(abs(f.coeffs()[i]), abs(f.leading()));
    r.canonicalize();
    h = std::max(h, r);
  }
  const Rational base = Rational(m - 1) - h;
  expect(sgn(base) >= 0, "root_bound");
  Rational lhs = 1;
  for (std::uint64_t i = 0; i < delta; ++i) lhs *= base;
  expect(lhs >= Rational(d), "root_bound");
}

// Smallest multiple of 1/10^4 whose delta-th power is >= d, by bisection on
// the numerator.
Rational root_radius(const Integer& d, std::uint64_t delta) {
  const Integer scale = 10000;
  const Integer target = d * power(scale, delta);
  Integer lo = 0, hi = scale;
  while (power(hi, delta) < target) hi *= 2;
  while (lo + 1 < hi) {
    const Integer mid = (lo + hi) / 2;
    if (power(mid, delta) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Rational r(hi, scale);
  r.canonicalize();
  return r;
}

void check_dominance(const std::vector<Integer>& c, const Rational& rho) {
  Rational sum = 0, rho_pow = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    rho_pow *= rho;
    sum += Rational(abs(c[i])) * rho_pow;
  }
  expect(sum < Rational(abs(c[0])), "root_exclusion");
}

void check_single_prime(const Certificate& cert, const Integer& value) {
  const PrimeEntry& e = cert.primes.front();
  check_prime(e.p, "not_prime");
  expect(e.j == 0, "j_range");
  expect(e.k >= 1, "product");
  expect(*cert.d >= 1, "product");
  expect(!mpz_divisible_p(cert.d->get_mpz_t(), e.p.get_mpz_t()), "p_divides_d");
  expect(power(e.p, e.k) * *cert.d == abs(value), "product");
}

std::uint64_t bottom_bound(const std::vector<Integer>& s, const Integer& p) {
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (const auto v = val(s[i], p)) best = std::min<std::uint64_t>(best, i + *v);
  }
  return best;
}

std::uint64_t top_bound(const std::vector<Integer>& s, const Integer& p, std::uint64_t k) {
  const std::size_t n = s.size() - 1;
  std::uint64_t best = k;
  for (std::size_t i = 1; i <= n; ++i) {
    if (const auto v = val(s[n - i], p)) best = std::min<std::uint64_t>(best, i + *v);
  }
  return best;
}

int sign_of(const Integer& v) { return sgn(v) < 0 ? -1 : 1; }

void check_structure(const Certificate& c) {
  const bool shifted = c.theorem == Theorem::T1 || c.theorem == Theorem::T2 || c.theorem == Theorem::T3 ||
                       c.theorem == Theorem::T4;
  const bool single = c.theorem == Theorem::T3 || c.theorem == Theorem::T4 || c.theorem == Theorem::L3 ||
                      c.theorem == Theorem::L5;
  const bool wants_q = c.theorem == Theorem::T2 || c.theorem == Theorem::T4 || c.theorem == Theorem::L4 ||
                       c.theorem == Theorem::L5;
  const bool direct = c.theorem == Theorem::L3 || c.theorem == Theorem::L4 || c.theorem == Theorem::L5;
  const bool uses_delta = single || c.theorem == Theorem::NP;
  const std::string tag(to_string(c.theorem));

  if (c.poly.is_zero()) malformed(tag + ": empty polynomial");
  if (sgn(c.content) <= 0) malformed(tag + ": content must be positive");
  if (c.bound < 1) malformed(tag + ": bound must be at least 1");
  if (c.sign != 1 && c.sign != -1) malformed(tag + ": sign must be 1 or -1");
  if (shifted != c.m.has_value()) malformed(tag + (shifted ? ": witness m missing" : ": unexpected m"));
  if (c.reversed && !direct) malformed(tag + ": only direct lemmas may be reversed");
  if (c.theorem == Theorem::NP) {
    if (!c.primes.empty()) malformed("NP: unexpected primes");
  } else if (single) {
    if (c.primes.size() != 1) malformed(tag + ": exactly one prime expected");
  } else if (c.primes.empty()) {
    malformed(tag + ": primes missing");
  }
  if (single != c.d.has_value()) malformed(tag + (single ? ": d missing" : ": unexpected d"));
  if (wants_q != c.q.has_value()) malformed(tag + (wants_q ? ": q missing" : ": unexpected q"));
  if (!uses_delta && c.delta) malformed(tag + ": unexpected delta");
}

// Delta must be reproducible from its Theorem-5 witness on poly or on its
// reversal (both have the same factor degrees).
std::uint64_t check_delta(const Polynomial& g, const std::optional<DegreeBound>& delta) {
  if (!delta) return 1;
  const DegreeBound& b = *delta;
  if (b.prime < 2 || !is_prime(b.prime) || b.j < 1 || b.j > g.degree()) throw Failure{"delta_witness"};
  for (const Polynomial& target : {g, reverse(g)}) {
    const auto r = theorem5_bound(target, b.prime, b.j);
    if (const auto* got = std::get_if<DegreeBound>(&r)) {
      if (got->bound == b.bound && got->d1 == b.d1 && got->d2 == b.d2) return b.bound;
    }
  }
  throw Failure{"delta_witness"};
}

PrimeCertainty expected_certainty(const Certificate& c) {
  const Integer& limit = deterministic_bound();
  bool probable = c.delta && c.delta->prime >= limit;
  for (const auto& e : c.primes) probable = probable || e.p >= limit;
  if (c.q) probable = probable || *c.q >= limit;
  return probable ? PrimeCertainty::Probable : PrimeCertainty::Deterministic;
}

void replay(const Polynomial& f, const Certificate& cert) {
  expect(!f.is_zero(), "polynomial_mismatch");
  const PrimitivePart pp = primitive_part(f);
  expect(pp.primitive == cert.poly && pp.content == cert.content, "polynomial_mismatch");
  const Polynomial& g = cert.poly;
  expect(content(g) == 1, "not_primitive");
  expect(g.degree() >= 1 && sgn(g.constant()) != 0, "polynomial_mismatch");

  const std::uint64_t delta = check_delta(g, cert.delta);
  const std::size_t n = g.degree();

  std::vector<Integer> s;
  if (cert.m) {
    s = binomial_shift(g.coeffs(), *cert.m);
  } else {
    s = cert.reversed ? reverse(g).coeffs() : g.coeffs();
  }
  const Integer& s0 = s.front();
  const Integer& sn = s.back();

  switch (cert.theorem) {
    case Theorem::T1:
      check_m_bound(g, *cert.m);
      expect(sgn(s0) != 0, "zero_value");
      expect(cert.sign == sign_of(s0), "sign");
      check_prime_list(cert.primes, s0);
      check_j_indices(cert.primes, s, false);
      expect(cert.bound == cert.primes.size(), "bound_formula");
      break;
    case Theorem::T2:
    case Theorem::L4:
      if (cert.m) check_m_bound(g, *cert.m);
      expect(sgn(s0) != 0, "zero_value");
      expect(cert.sign == sign_of(sn), "sign");
      check_q(cert.q, s0, sn);
      check_prime_list(cert.primes, sn);
      check_j_indices(cert.primes, s, true);
      if (cert.theorem == Theorem::L4) check_dominance(s, Rational(1));
      expect(cert.bound == cert.primes.size(), "bound_formula");
      break;
    case Theorem::T3:
    case Theorem::L3:
      expect(sgn(s0) != 0, "zero_value");
      expect(cert.sign == sign_of(s0), "sign");
      check_single_prime(cert, s0);
      if (cert.m) {
        check_root_bound(g, *cert.m, delta, *cert.d);
      } else {
        check_dominance(s, root_radius(*cert.d, delta));
      }
      expect(cert.bound == bottom_bound(s, cert.primes.front().p), "bound_formula");
      break;
    case Theorem::T4:
    case Theorem::L5:
      expect(sgn(s0) != 0, "zero_value");
      expect(cert.sign == sign_of(sn), "sign");
      check_single_prime(cert, sn);
      if (cert.m) {
        check_root_bound(g, *cert.m, delta, *cert.d);
      } else {
        check_dominance(s, root_radius(*cert.d, delta));
      }
      check_q(cert.q, s0, sn);
      expect(cert.bound == top_bound(s, cert.primes.front().p, cert.primes.front().k), "bound_formula");
      break;
    case Theorem::NP:
      expect(cert.sign == 1, "sign");
      expect(cert.bound == 1, "bound_formula");
      expect(n < 2 * delta, "degree_bound");
      break;
  }
  expect(cert.prime_certainty == expected_certainty(cert), "prime_certainty");
}

}  // namespace

VerificationReport verify_certificate(const Polynomial& f, const Certificate& cert) {
  check_structure(cert);
  try {
    replay(f, cert);
  } catch (const Failure& failure) {
    return {false, failure.name};
  }
  return {true, {}};
}

}  // namespace polycert
