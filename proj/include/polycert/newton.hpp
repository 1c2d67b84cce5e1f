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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polycert/int_arith.hpp"
#include "polycert/polynomial.hpp"

namespace polycert {

/// (i, v_p(a_i)) for a nonzero coefficient a_i.
struct ValuationPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const ValuationPoint&, const ValuationPoint&) = default;
};

struct PolygonEdge {
  ValuationPoint from;
  ValuationPoint to;
  std::int64_t width = 0;
  Rational slope;
  std::uint64_t lattice_points = 0;
};

/// Lower convex hull of the valuation points of a polynomial w.r.t. a prime.
struct NewtonPolygon {
  Integer prime;
  std::vector<ValuationPoint> vertices;

  std::vector<PolygonEdge> edges() const;
  /// Every lattice point lying on the hull, endpoints included, x-ascending.
  std::vector<ValuationPoint> lattice_points() const;
};

/// Lower bound on the degree of every irreducible factor.
struct DegreeBound {
  enum class Source { Trivial, Theorem5 };

  std::uint64_t bound = 1;
  Source source = Source::Trivial;
  // Witness, meaningful when source == Theorem5.
  Integer prime{0};
  std::size_t j = 0;
  std::uint64_t d1 = 0;
  std::optional<std::uint64_t> d2;

  static DegreeBound trivial() { return {}; }
  bool is_trivial() const noexcept { return source == Source::Trivial; }

  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

struct HypothesisFailure {
  std::string condition;
  std::size_t index = 0;
};

using Theorem5Result = std::variant<DegreeBound, HypothesisFailure>;

/// Throws ZeroEndCoefficient when a_0 a_n = 0.
std::vector<ValuationPoint> valuation_points(const Polynomial& p, const Integer& prime);

/// Monotone-chain lower hull; collinear interior points are dropped so slopes
/// strictly increase. `points` must be sorted by x.
NewtonPolygon lower_hull(std::span<const ValuationPoint> points, const Integer& prime = Integer(0));

NewtonPolygon newton_polygon(const Polynomial& p, const Integer& prime);

/// 1 + gcd(|dx|, |dy|). Throws DegenerateSegment when a == b.
std::uint64_t lattice_count(const ValuationPoint& a, const ValuationPoint& b);

/// Checks the three valuation conditions at (prime, j) directly on the
/// coefficients and, when they hold, returns k_f built from d_1, d_2.
Theorem5Result theorem5_bound(const Polynomial& p, const Integer& prime, std::size_t j);

/// Best Theorem-5 bound over primes dividing a_0 a_n and all j; the trivial
/// bound when none applies. Ties go to the smaller prime, then smaller j.
DegreeBound best_delta(const Polynomial& p, const FactorBudget& budget = {});

/// Irreducible when a factorization would need a factor of degree < bound,
/// i.e. deg p < 2 * bound.
bool irreducible_by_degree(const Polynomial& p, const DegreeBound& delta);

}  // namespace polycert
