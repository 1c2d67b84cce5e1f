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

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 expected");

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

/// Time allowance for one integer factorization plus the seed that drives
/// Pollard rho. Each call to factorize() gets the full limit.
struct FactorBudget {
  std::chrono::milliseconds limit{2000};
  std::uint64_t seed = 0x5eedULL;
};

/// Reads POLYCERT_SEED from the environment, falling back to the default.
std::uint64_t default_seed();

enum class Primality { Composite, Prime, ProbablePrime };

/// Miller-Rabin. Deterministic below kDeterministicBound via a fixed base set,
/// otherwise 40 seeded random rounds reported as ProbablePrime.
Primality primality(const Integer& n);
bool is_prime(const Integer& n);

/// 3,317,044,064,679,887,385,961,981: bases 2..41 decide primality below it.
const Integer& deterministic_bound();

struct PrimePower {
  Integer prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = prod(prime^exponent) * cofactor; cofactor is 1 iff complete.
struct Factorization {
  Integer value;
  std::vector<PrimePower> factors;
  Integer cofactor{1};
  bool complete = true;

  /// True when every listed prime was proven prime deterministically.
  bool deterministic() const;
  std::uint64_t exponent_of(const Integer& p) const;
};

/// Factors |n|: trial division by primes below 10^6, then Pollard-Brent rho
/// until the budget expires. Throws ZeroArgument for n = 0.
Factorization factorize(const Integer& n, const FactorBudget& budget = {});

/// Least prime dividing |n|. Throws NoPrimeDivisor for |n| <= 1 and
/// BudgetExceeded when the cofactor cannot be split in time.
Integer smallest_prime_factor(const Integer& n, const FactorBudget& budget = {});

/// Primes below 10^6, ascending.
std::span<const std::uint32_t> small_primes();

/// v_p(n) with v_p(0) = infinity.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v), finite_(true) {}
  static constexpr Valuation infinity() { return Valuation(0, false); }

  constexpr bool is_infinite() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }
  /// Only meaningful when finite.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Valuation(std::uint64_t v, bool finite) : value_(v), finite_(finite) {}

  std::uint64_t value_ = 0;
  bool finite_ = true;
};

/// Throws NotPrime unless p is prime.
Valuation vp(const Integer& n, const Integer& p);

/// Same as vp() without the primality check; p must be a prime > 1.
Valuation valuation(const Integer& n, const Integer& p);

/// a/b < c/d decided as a*d < c*b; always true when c is infinite.
bool frac_lt(const Integer& a, const Integer& b, const Valuation& c, const Integer& d);

/// a/b <= c/d, same conventions as frac_lt.
bool frac_le(const Integer& a, const Integer& b, const Valuation& c, const Integer& d);

}  // namespace polycert
