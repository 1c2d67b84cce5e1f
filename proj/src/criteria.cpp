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

#include "polycert/criteria.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "polycert/error.hpp"

namespace polycert {

namespace {

constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();

void require_applicable(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "criterion on zero polynomial");
  if (f.degree() == 0) throw Error(ErrorCode::DegreeTooLow, "criterion on a constant");
  if (sgn(f.constant()) == 0) throw Error(ErrorCode::ZeroEndCoefficient, "a_0 = 0");
  if (content(f) != 1) throw Error(ErrorCode::NotPrimitive, "content " + content(f).get_str());
}

int sign_of(const Integer& v) { return sgn(v) < 0 ? -1 : 1; }

PrimeCertainty certainty_of(const Certificate& c) {
  const Integer& bound = deterministic_bound();
  for (const auto& e : c.primes) {
    if (e.p >= bound) return PrimeCertainty::Probable;
  }
  if (c.q && *c.q >= bound) return PrimeCertainty::Probable;
  if (c.delta && c.delta->prime >= bound) return PrimeCertainty::Probable;
  return PrimeCertainty::Deterministic;
}

Certificate base_certificate(Theorem t, const Polynomial& f) {
  Certificate c;
  c.theorem = t;
  c.poly = f;
  return c;
}

CriterionOutcome finish(Certificate c) {
  c.prime_certainty = certainty_of(c);
  return CriterionOutcome::certify(std::move(c));
}

Integer prime_power(const Integer& p, std::uint64_t k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

std::optional<DegreeBound> stored_delta(const DegreeBound& delta) {
  if (delta.is_trivial()) return std::nullopt;
  return delta;
}

// Shared j-search for T1/T2/L4: every prime of the factored quantity needs a
// valid index.
std::optional<std::string> fill_j_indices(Certificate& c, const Factorization& fact,
                                          const std::vector<Integer>& s, bool from_top) {
  for (const auto& pp : fact.factors) {
    const auto j = smallest_valid_j(s, pp.prime, pp.exponent, from_top);
    if (!j) return "no_j_for_prime_" + pp.prime.get_str();
    c.primes.push_back({pp.prime, pp.exponent, *j});
  }
  return std::nullopt;
}

// |s_0 / q| <= |s_n| with q the smallest prime of |s_0|.
std::optional<CriterionOutcome> q_condition(Certificate& c, const Integer& s0, const Integer& sn,
                                            const std::optional<Integer>& q) {
  if (!q) return CriterionOutcome::failed("no_q");
  if (abs(s0) / *q > abs(sn)) return CriterionOutcome::failed("q_condition");
  c.q = *q;
  return std::nullopt;
}

}  // namespace

WitnessContext::WitnessContext(const Polynomial& f, Integer m, FactorBudget budget,
                               const Factorization* leading)
    : f_(f), m_(std::move(m)), budget_(budget), leading_(leading) {}

const std::vector<Integer>& WitnessContext::shift() {
  if (!shift_) shift_ = taylor_shift(f_, m_).s;
  return *shift_;
}

const Factorization& WitnessContext::value_factorization() {
  if (!value_fact_) value_fact_ = factorize(shift().front(), budget_);
  return *value_fact_;
}

const Factorization& WitnessContext::leading_factorization() {
  if (leading_) return *leading_;
  if (!leading_fact_) leading_fact_ = factorize(f_.leading(), budget_);
  return *leading_fact_;
}

std::optional<Integer> WitnessContext::smallest_value_prime() {
  if (!q_) {
    const Integer& s0 = shift().front();
    if (abs(s0) <= 1) {
      q_ = std::optional<Integer>{};
    } else if (value_fact_ && value_fact_->complete) {
      q_ = value_fact_->factors.front().prime;
    } else {
      q_ = smallest_prime_factor(s0, budget_);
    }
  }
  return *q_;
}

std::optional<std::size_t> smallest_valid_j(const std::vector<Integer>& s, const Integer& p,
                                            std::uint64_t k, bool from_top) {
  const std::size_t n = s.size() - 1;
  auto at = [&](std::size_t t) -> const Integer& { return from_top ? s[n - t] : s[t]; };
  const Integer kk = to_integer(k);
  for (std::size_t j = 1; j <= n; ++j) {
    if (valuation(at(j), p) != Valuation(0)) continue;
    if (std::gcd(k, static_cast<std::uint64_t>(j)) != 1) continue;
    bool ok = true;
    for (std::size_t t = 1; t < j && ok; ++t) ok = frac_lt(kk, to_integer(j), valuation(at(t), p), to_integer(j - t));
    if (ok) return j;
  }
  return std::nullopt;
}

bool witness_large_enough(const Polynomial& f, const Integer& m) {
  return (m - 2) * abs(f.leading()) >= max_lower_abs(f);
}

bool root_bound_holds(const Polynomial& f, const Integer& m, std::uint64_t delta, const Integer& d) {
  const Integer lead = abs(f.leading());
  const Integer base = lead * (m - 1) - max_lower_abs(f);
  if (sgn(base) < 0) return false;
  Integer lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(), delta);
  mpz_pow_ui(rhs.get_mpz_t(), lead.get_mpz_t(), delta);
  return lhs >= d * rhs;
}

std::uint64_t constant_side_bound(const std::vector<Integer>& s, const Integer& p) {
  std::uint64_t best = kNoBound;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Valuation v = valuation(s[i], p);
    if (v.is_finite()) best = std::min<std::uint64_t>(best, i + v.value());
  }
  return best;
}

std::uint64_t leading_side_bound(const std::vector<Integer>& s, const Integer& p, std::uint64_t k) {
  const std::size_t n = s.size() - 1;
  std::uint64_t best = k;
  for (std::size_t i = 1; i <= n; ++i) {
    const Valuation v = valuation(s[n - i], p);
    if (v.is_finite()) best = std::min<std::uint64_t>(best, i + v.value());
  }
  return best;
}

CriterionOutcome check_theorem1(WitnessContext& ctx) {
  const Polynomial& f = ctx.poly();
  require_applicable(f);
  const auto& s = ctx.shift();
  if (sgn(s.front()) == 0) throw Error(ErrorCode::WitnessIsRoot, "f(m) = 0");
  if (!witness_large_enough(f, ctx.m())) return CriterionOutcome::failed("m_too_small");

  const Factorization& fact = ctx.value_factorization();
  if (!fact.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (fact.factors.empty()) return CriterionOutcome::failed("unit_value");

  Certificate c = base_certificate(Theorem::T1, f);
  c.m = ctx.m();
  c.sign = sign_of(s.front());
  if (auto why = fill_j_indices(c, fact, s, false)) return CriterionOutcome::failed(*why);
  c.bound = c.primes.size();
  return finish(std::move(c));
}

CriterionOutcome check_theorem2(WitnessContext& ctx) {
  const Polynomial& f = ctx.poly();
  require_applicable(f);
  const auto& s = ctx.shift();
  if (sgn(s.front()) == 0) throw Error(ErrorCode::WitnessIsRoot, "f(m) = 0");
  if (!witness_large_enough(f, ctx.m())) return CriterionOutcome::failed("m_too_small");

  const Factorization& lead = ctx.leading_factorization();
  if (!lead.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (lead.factors.empty()) return CriterionOutcome::failed("no_prime");

  Certificate c = base_certificate(Theorem::T2, f);
  c.m = ctx.m();
  c.sign = sign_of(s.back());
  try {
    if (auto bad = q_condition(c, s.front(), s.back(), ctx.smallest_value_prime())) return *bad;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    return CriterionOutcome::inconclusive("q_unavailable");
  }
  if (auto why = fill_j_indices(c, lead, s, true)) return CriterionOutcome::failed(*why);
  c.bound = c.primes.size();
  return finish(std::move(c));
}

CriterionOutcome check_theorem3(WitnessContext& ctx, const DegreeBound& delta) {
  const Polynomial& f = ctx.poly();
  require_applicable(f);
  const auto& s = ctx.shift();
  if (sgn(s.front()) == 0) throw Error(ErrorCode::WitnessIsRoot, "f(m) = 0");

  const Factorization& fact = ctx.value_factorization();
  if (!fact.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (fact.factors.empty()) return CriterionOutcome::failed("no_prime");

  std::optional<Certificate> best;
  for (const auto& pp : fact.factors) {
    const Integer d = fact.value / prime_power(pp.prime, pp.exponent);
    if (!root_bound_holds(f, ctx.m(), delta.bound, d)) continue;
    const std::uint64_t bound = constant_side_bound(s, pp.prime);
    if (best && bound >= best->bound) continue;
    Certificate c = base_certificate(Theorem::T3, f);
    c.m = ctx.m();
    c.sign = sign_of(s.front());
    c.primes = {{pp.prime, pp.exponent, 0}};
    c.d = d;
    c.delta = stored_delta(delta);
    c.bound = bound;
    best = std::move(c);
  }
  if (!best) {
    const bool base_negative = abs(f.leading()) * (ctx.m() - 1) < max_lower_abs(f);
    return CriterionOutcome::failed(base_negative ? "m_too_small" : "d_too_large");
  }
  return finish(std::move(*best));
}

CriterionOutcome check_theorem4(WitnessContext& ctx, const DegreeBound& delta) {
  const Polynomial& f = ctx.poly();
  require_applicable(f);
  const auto& s = ctx.shift();
  if (sgn(s.front()) == 0) throw Error(ErrorCode::WitnessIsRoot, "f(m) = 0");

  const Factorization& lead = ctx.leading_factorization();
  if (!lead.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (lead.factors.empty()) return CriterionOutcome::failed("no_prime");

  Certificate proto = base_certificate(Theorem::T4, f);
  proto.m = ctx.m();
  proto.sign = sign_of(s.back());
  proto.delta = stored_delta(delta);
  try {
    if (auto bad = q_condition(proto, s.front(), s.back(), ctx.smallest_value_prime())) return *bad;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    return CriterionOutcome::inconclusive("q_unavailable");
  }

  std::optional<Certificate> best;
  for (const auto& pp : lead.factors) {
    const Integer d = lead.value / prime_power(pp.prime, pp.exponent);
    if (!root_bound_holds(f, ctx.m(), delta.bound, d)) continue;
    const std::uint64_t bound = leading_side_bound(s, pp.prime, pp.exponent);
    if (best && bound >= best->bound) continue;
    Certificate c = proto;
    c.primes = {{pp.prime, pp.exponent, 0}};
    c.d = d;
    c.bound = bound;
    best = std::move(c);
  }
  if (!best) {
    const bool base_negative = abs(f.leading()) * (ctx.m() - 1) < max_lower_abs(f);
    return CriterionOutcome::failed(base_negative ? "m_too_small" : "d_too_large");
  }
  return finish(std::move(*best));
}

CriterionOutcome check_theorem1(const Polynomial& f, const Integer& m, const FactorBudget& budget) {
  WitnessContext ctx(f, m, budget);
  return check_theorem1(ctx);
}

CriterionOutcome check_theorem2(const Polynomial& f, const Integer& m, const FactorBudget& budget) {
  WitnessContext ctx(f, m, budget);
  return check_theorem2(ctx);
}

CriterionOutcome check_theorem3(const Polynomial& f, const Integer& m, const DegreeBound& delta,
                                const FactorBudget& budget) {
  WitnessContext ctx(f, m, budget);
  return check_theorem3(ctx, delta);
}

CriterionOutcome check_theorem4(const Polynomial& f, const Integer& m, const DegreeBound& delta,
                                const FactorBudget& budget) {
  WitnessContext ctx(f, m, budget);
  return check_theorem4(ctx, delta);
}

bool root_exclusion(const Polynomial& g, const Rational& rho) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root_exclusion");
  if (sgn(g.constant()) == 0) throw Error(ErrorCode::ZeroConstantTerm, "root_exclusion needs s_0 != 0");
  if (sgn(rho) <= 0) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  // Scale by den^n: sum |s_i| num^i den^(n-i) < |s_0| den^n.
  const Integer& num = rho.get_num();
  const Integer& den = rho.get_den();
  const std::size_t n = g.degree();
  std::vector<Integer> den_pow(n + 1);
  den_pow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) den_pow[i] = den_pow[i - 1] * den;
  Integer lhs = 0, num_pow = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    num_pow *= num;
    lhs += abs(g.coeffs()[i]) * num_pow * den_pow[n - i];
  }
  return lhs < abs(g.constant()) * den_pow[n];
}

Rational nth_root_upper(const Integer& d, std::uint64_t delta) {
  if (d < 1 || delta < 1) throw Error(ErrorCode::InvalidArgument, "nth_root_upper needs d, delta >= 1");
  const Integer scale = 10000;
  Integer target, root, check;
  mpz_pow_ui(target.get_mpz_t(), scale.get_mpz_t(), delta);
  target *= d;
  mpz_root(root.get_mpz_t(), target.get_mpz_t(), delta);
  mpz_pow_ui(check.get_mpz_t(), root.get_mpz_t(), delta);
  if (check < target) root += 1;
  Rational r(root, scale);
  r.canonicalize();
  return r;
}

CriterionOutcome check_lemma3_direct(const Polynomial& g, const DegreeBound& delta, const FactorBudget& budget) {
  require_applicable(g);
  const Factorization fact = factorize(g.constant(), budget);
  if (!fact.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (fact.factors.empty()) return CriterionOutcome::failed("no_prime");

  std::optional<Certificate> best;
  for (const auto& pp : fact.factors) {
    const Integer d = fact.value / prime_power(pp.prime, pp.exponent);
    const std::uint64_t bound = constant_side_bound(g.coeffs(), pp.prime);
    if (best && bound >= best->bound) continue;
    if (!root_exclusion(g, nth_root_upper(d, delta.bound))) continue;
    Certificate c = base_certificate(Theorem::L3, g);
    c.sign = sign_of(g.constant());
    c.primes = {{pp.prime, pp.exponent, 0}};
    c.d = d;
    c.delta = stored_delta(delta);
    c.bound = bound;
    best = std::move(c);
  }
  if (!best) return CriterionOutcome::inconclusive("root_location_unverified");
  return finish(std::move(*best));
}

CriterionOutcome check_lemma4_direct(const Polynomial& g, const FactorBudget& budget) {
  require_applicable(g);
  const Factorization lead = factorize(g.leading(), budget);
  if (!lead.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (lead.factors.empty()) return CriterionOutcome::failed("no_prime");

  Certificate c = base_certificate(Theorem::L4, g);
  c.sign = sign_of(g.leading());
  std::optional<Integer> q;
  if (abs(g.constant()) > 1) {
    try {
      q = smallest_prime_factor(g.constant(), budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      return CriterionOutcome::inconclusive("q_unavailable");
    }
  }
  if (auto bad = q_condition(c, g.constant(), g.leading(), q)) return *bad;
  if (auto why = fill_j_indices(c, lead, g.coeffs(), true)) return CriterionOutcome::failed(*why);
  if (!root_exclusion(g, Rational(1))) return CriterionOutcome::inconclusive("root_location_unverified");
  c.bound = c.primes.size();
  return finish(std::move(c));
}

CriterionOutcome check_lemma5_direct(const Polynomial& g, const DegreeBound& delta, const FactorBudget& budget) {
  require_applicable(g);
  const Factorization lead = factorize(g.leading(), budget);
  if (!lead.complete) return CriterionOutcome::inconclusive("factorization_incomplete");
  if (lead.factors.empty()) return CriterionOutcome::failed("no_prime");

  Certificate proto = base_certificate(Theorem::L5, g);
  proto.sign = sign_of(g.leading());
  proto.delta = stored_delta(delta);
  std::optional<Integer> q;
  if (abs(g.constant()) > 1) {
    try {
      q = smallest_prime_factor(g.constant(), budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      return CriterionOutcome::inconclusive("q_unavailable");
    }
  }
  if (auto bad = q_condition(proto, g.constant(), g.leading(), q)) return *bad;

  std::optional<Certificate> best;
  for (const auto& pp : lead.factors) {
    const Integer d = lead.value / prime_power(pp.prime, pp.exponent);
    const std::uint64_t bound = leading_side_bound(g.coeffs(), pp.prime, pp.exponent);
    if (best && bound >= best->bound) continue;
    if (!root_exclusion(g, nth_root_upper(d, delta.bound))) continue;
    Certificate c = proto;
    c.primes = {{pp.prime, pp.exponent, 0}};
    c.d = d;
    c.bound = bound;
    best = std::move(c);
  }
  if (!best) return CriterionOutcome::inconclusive("root_location_unverified");
  return finish(std::move(*best));
}

}  // namespace polycert
