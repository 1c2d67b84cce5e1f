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

#include "polycert/int_arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "polycert/error.hpp"

namespace polycert {

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;
constexpr int kRandomRounds = 40;
constexpr std::array<std::uint32_t, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

using Clock = std::chrono::steady_clock;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_round_u64(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t a) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : kBases) {
    if (!mr_round_u64(n, d, s, a)) return false;
  }
  return true;
}

bool mr_round(const Integer& n, const Integer& d, unsigned long s, const Integer& a) {
  Integer x;
  const Integer nm1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
  }
  return false;
}

std::uint64_t low_bits(const Integer& n) {
  // Least-significant limb; enough to derive a per-input seed.
  return mpz_size(n.get_mpz_t()) ? static_cast<std::uint64_t>(mpz_getlimbn(n.get_mpz_t(), 0)) : 0;
}

Integer random_below(std::mt19937_64& rng, const Integer& n) {
  // n fits in a handful of limbs at desk scale; assemble 64-bit chunks and
  // reduce, the bias is irrelevant for rho parameters and MR bases.
  const std::size_t limbs = mpz_size(n.get_mpz_t()) + 1;
  Integer r = 0;
  for (std::size_t i = 0; i < limbs; ++i) {
    r <<= 64;
    r += to_integer(rng());
  }
  return r % n;
}

bool fits_u64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& n) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

// Pollard rho with Brent's cycle detection and batched gcds. Returns a
// nontrivial divisor of the odd composite n, or 0 when the deadline passes.
Integer pollard_brent(const Integer& n, std::mt19937_64& rng, Clock::time_point deadline) {
  constexpr unsigned long kBatch = 128;
  while (true) {
    Integer y = random_below(rng, n - 1) + 1;
    const Integer c = random_below(rng, n - 1) + 1;
    Integer x, ys, q = 1, g = 1, diff;
    auto step = [&](Integer& v) {
      v *= v;
      v += c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q *= abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (Clock::now() > deadline) return 0;
      }
    }
    if (g == n) {
      // The batch overshot; replay one step at a time from the saved point.
      do {
        step(ys);
        diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 0) return g;
    // cycle failure: fresh parameters
  }
}

// Returns k >= 2 and root with root^k == n, or k == 1.
unsigned long perfect_power(const Integer& n, Integer& root) {
  if (!mpz_perfect_power_p(n.get_mpz_t())) return 1;
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return k;
  }
  return 1;
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYCERT_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      // unparsable seed: keep the default
    }
  }
  return 0x5eedULL;
}

const Integer& deterministic_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kTrialLimit);
  return primes;
}

Primality primality(const Integer& n) {
  if (n < 2) return Primality::Composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::Prime : Primality::Composite;
  for (std::uint32_t p : kBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
  }
  Integer d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (std::uint32_t a : kBases) {
    if (!mr_round(n, d, s, Integer(a))) return Primality::Composite;
  }
  if (n < deterministic_bound()) return Primality::Prime;
  std::mt19937_64 rng(low_bits(n) ^ 0x9e3779b97f4a7c15ULL);
  const Integer span = n - 3;
  for (int i = 0; i < kRandomRounds; ++i) {
    const Integer a = random_below(rng, span) + 2;
    if (!mr_round(n, d, s, a)) return Primality::Composite;
  }
  return Primality::ProbablePrime;
}

bool is_prime(const Integer& n) { return primality(n) != Primality::Composite; }

bool Factorization::deterministic() const {
  for (const auto& f : factors) {
    if (f.prime >= deterministic_bound()) return false;
  }
  return true;
}

std::uint64_t Factorization::exponent_of(const Integer& p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

Factorization factorize(const Integer& n, const FactorBudget& budget) {
  if (sgn(n) == 0) throw Error(ErrorCode::ZeroArgument, "factorize(0)");
  const auto deadline = Clock::now() + budget.limit;
  Factorization out;
  out.value = abs(n);
  Integer rem = out.value;
  std::map<Integer, std::uint64_t> found;

  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(rem.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    std::uint64_t e = 0;
    do {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
    found[Integer(p)] += e;
  }

  std::vector<std::pair<Integer, std::uint64_t>> pending;
  if (rem > 1) pending.emplace_back(rem, 1);
  std::mt19937_64 rng(budget.seed ^ low_bits(out.value));
  while (!pending.empty()) {
    auto [c, mult] = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      found[c] += mult;
      continue;
    }
    Integer root;
    if (const unsigned long k = perfect_power(c, root); k > 1) {
      pending.emplace_back(root, mult * k);
      continue;
    }
    const Integer d = Clock::now() > deadline ? Integer(0) : pollard_brent(c, rng, deadline);
    if (d == 0) {
      out.complete = false;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), c.get_mpz_t(), mult);
      out.cofactor *= pw;
      continue;
    }
    pending.emplace_back(d, mult);
    pending.emplace_back(c / d, mult);
  }

  out.factors.reserve(found.size());
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

Integer smallest_prime_factor(const Integer& n, const FactorBudget& budget) {
  const Integer a = abs(n);
  if (a <= 1) throw Error(ErrorCode::NoPrimeDivisor, "|n| <= 1");
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(a.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) return a;
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return Integer(p);
  }
  if (is_prime(a)) return a;
  const Factorization f = factorize(a, budget);
  if (!f.complete) throw Error(ErrorCode::BudgetExceeded, "could not split " + f.cofactor.get_str());
  return f.factors.front().prime;
}

Valuation valuation(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) return Valuation::infinity();
  Integer rest;
  return Valuation(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  return valuation(n, p);
}

bool frac_lt(const Integer& a, const Integer& b, const Valuation& c, const Integer& d) {
  if (c.is_infinite()) return true;
  return a * d < to_integer(c.value()) * b;
}

bool frac_le(const Integer& a, const Integer& b, const Valuation& c, const Integer& d) {
  if (c.is_infinite()) return true;
  return a * d <= to_integer(c.value()) * b;
}

}  // namespace polycert
