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

// Kronecker's method. Uses its own trial division and polynomial division so
// that it stays independent of the factoring code it is meant to check.

#include "polycert/oracle.hpp"

#include <algorithm>
#include <optional>

#include "polycert/error.hpp"

namespace polycert {

namespace {

// Positive divisors of |v|, ascending. v != 0.
std::vector<Integer> divisors(const Integer& v) {
  Integer n = abs(v);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t size = out.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < size; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division in Z[z]; nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.degree() > a.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  const std::size_t nb = b.degree();
  std::vector<Integer> quot(a.degree() - nb + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + nb];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    const Integer c = top / b.leading();
    quot[i] = c;
    for (std::size_t k = 0; k <= nb; ++k) rem[i + k] -= c * b.coeffs()[k];
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) return std::nullopt;
  }
  return Polynomial(std::move(quot));
}

Polynomial positive_lead(const Polynomial& p) { return sgn(p.leading()) < 0 ? scale(p, Integer(-1)) : p; }

std::optional<Polynomial> rational_root_factor(const Polynomial& h) {
  const auto& a = h.coeffs();
  const std::size_t n = h.degree();
  for (const auto& q : divisors(h.leading())) {
    for (const auto& p0 : divisors(h.constant())) {
      if (gcd(p0, q) != 1) continue;
      for (const Integer& p : {Integer(p0), Integer(-p0)}) {
        // q^n h(p/q) = sum a_i p^i q^(n-i)
        Integer acc = 0, pp = 1;
        std::vector<Integer> qpow(n + 1);
        qpow[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
        for (std::size_t i = 0; i <= n; ++i) {
          acc += a[i] * pp * qpow[n - i];
          pp *= p;
        }
        if (sgn(acc) == 0) return Polynomial(std::vector<Integer>{-p, q});
      }
    }
  }
  return std::nullopt;
}

class KroneckerSearch {
 public:
  KroneckerSearch(const Polynomial& h, std::size_t e, std::uint64_t cap) : h_(h), e_(e), cap_(cap) {
    // e interpolation nodes plus one check node, skipping zeros of h.
    for (long x = 0; xs_.size() < e + 1; x = x > 0 ? -x : -x + 1) {
      const Integer v = evaluate(h, Integer(x));
      if (sgn(v) == 0) continue;
      xs_.push_back(x);
      values_.push_back(v);
    }
    for (std::size_t i = 0; i < e; ++i) divs_.push_back(divisors(values_[i]));
    for (const auto& l : divisors(h.leading())) {
      leads_.push_back(l);
      leads_.push_back(-l);
    }
  }

  std::optional<Polynomial> run() {
    table_.assign(e_, std::vector<Integer>(e_));
    return descend(0);
  }

 private:
  // table_[i] holds the divided differences ending at node i:
  // table_[i][k] = [y_{i-k}, ..., y_i]. Newton coefficients are table_[i][i].
  std::optional<Polynomial> descend(std::size_t i) {
    if (i == e_) return try_leads();
    for (const auto& d : divs_[i]) {
      for (const int sign : {1, -1}) {
        if (i == 0 && sign < 0) continue;  // g and -g are the same factor
        tick();
        const Integer y = sign > 0 ? d : Integer(-d);
        table_[i][0] = y;
        bool integral = true;
        for (std::size_t k = 1; k <= i && integral; ++k) {
          const Integer num = table_[i][k - 1] - table_[i - 1][k - 1];
          const Integer den = Integer(xs_[i] - xs_[i - k]);
          if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            integral = false;
          } else {
            table_[i][k] = num / den;
          }
        }
        if (!integral) continue;
        if (auto g = descend(i + 1)) return g;
      }
    }
    return std::nullopt;
  }

  std::optional<Polynomial> try_leads() {
    for (const auto& lead : leads_) {
      tick();
      // g = sum_k c_k prod_{j<k} (z - x_j) with c_e = lead.
      std::vector<Integer> g(e_ + 1, 0), basis{1};
      for (std::size_t k = 0; k <= e_; ++k) {
        const Integer& c = k < e_ ? table_[k][k] : lead;
        for (std::size_t t = 0; t < basis.size(); ++t) g[t] += c * basis[t];
        if (k < e_) {
          std::vector<Integer> next(basis.size() + 1, 0);
          for (std::size_t t = 0; t < basis.size(); ++t) {
            next[t + 1] += basis[t];
            next[t] -= basis[t] * xs_[k];
          }
          basis = std::move(next);
        }
      }
      Polynomial cand(std::move(g));
      const Integer at_check = evaluate(cand, Integer(xs_[e_]));
      if (sgn(at_check) == 0 || !mpz_divisible_p(values_[e_].get_mpz_t(), at_check.get_mpz_t())) continue;
      if (divide_exact(h_, cand)) return positive_lead(cand);
    }
    return std::nullopt;
  }

  void tick() {
    if (++nodes_ > cap_) throw Error(ErrorCode::OracleBudgetExceeded, "Kronecker search over the candidate cap");
  }

  const Polynomial& h_;
  std::size_t e_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<long> xs_;
  std::vector<Integer> values_;
  std::vector<std::vector<Integer>> divs_;
  std::vector<Integer> leads_;
  std::vector<std::vector<Integer>> table_;
};

// h primitive, positive lead, h(0) != 0.
void split(const Polynomial& h, const OracleLimits& limits, std::vector<Polynomial>& out) {
  if (h.degree() <= 1) {
    out.push_back(h);
    return;
  }
  std::optional<Polynomial> g = rational_root_factor(h);
  for (std::size_t e = 2; !g && e <= h.degree() / 2; ++e) g = KroneckerSearch(h, e, limits.max_candidates).run();
  if (!g) {
    out.push_back(h);
    return;
  }
  const Polynomial g_pos = positive_lead(*g);
  const Polynomial rest = positive_lead(*divide_exact(h, g_pos));
  split(g_pos, limits, out);
  split(rest, limits, out);
}

}  // namespace

bool oracle_factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

OracleFactorization oracle_factor(const Polynomial& f, const OracleLimits& limits) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "oracle_factor");
  if (f.degree() > limits.max_degree) {
    throw Error(ErrorCode::OracleScaleExceeded, "degree " + std::to_string(f.degree()) + " over the oracle limit");
  }
  for (const auto& a : f.coeffs()) {
    if (abs(a) > limits.coeff_cap) throw Error(ErrorCode::OracleScaleExceeded, "coefficient over the oracle cap");
  }
  OracleFactorization out;
  out.unit = sgn(f.leading()) < 0 ? -1 : 1;
  const PrimitivePart pp = primitive_part(f);
  out.content = pp.content;
  Polynomial h = positive_lead(pp.primitive);

  const Polynomial z{0, 1};
  while (h.degree() >= 1 && sgn(h.constant()) == 0) {
    out.factors.push_back(z);
    h = *divide_exact(h, z);
  }
  if (h.degree() >= 1) split(h, limits, out.factors);
  std::sort(out.factors.begin(), out.factors.end(), oracle_factor_less);
  return out;
}

std::size_t oracle_count(const Polynomial& f, const OracleLimits& limits) {
  if (!f.is_zero() && f.degree() == 0) throw Error(ErrorCode::DegreeTooLow, "oracle_count on a constant");
  return oracle_factor(f, limits).factors.size();
}

}  // namespace polycert
