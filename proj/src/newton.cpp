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

#include "polycert/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polycert/error.hpp"

namespace polycert {

namespace {

__extension__ typedef __int128 i128;

i128 cross(const ValuationPoint& o, const ValuationPoint& a, const ValuationPoint& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

void require_end_coefficients(const Polynomial& p) {
  if (p.is_zero() || sgn(p.constant()) == 0 || sgn(p.leading()) == 0) {
    throw Error(ErrorCode::ZeroEndCoefficient, "a_0 * a_n must be nonzero");
  }
}

std::int64_t to_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::vector<ValuationPoint> valuation_points(const Polynomial& p, const Integer& prime) {
  require_end_coefficients(p);
  if (!is_prime(prime)) throw Error(ErrorCode::NotPrime, prime.get_str() + " is not prime");
  std::vector<ValuationPoint> pts;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Valuation v = valuation(p.coeffs()[i], prime);
    if (v.is_finite()) pts.push_back({static_cast<std::int64_t>(i), to_i64(v.value())});
  }
  return pts;
}

NewtonPolygon lower_hull(std::span<const ValuationPoint> points, const Integer& prime) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidArgument, "hull needs at least two points");
  NewtonPolygon poly{prime, {}};
  auto& h = poly.vertices;
  for (const auto& pt : points) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt) <= 0) h.pop_back();
    h.push_back(pt);
  }
  return poly;
}

NewtonPolygon newton_polygon(const Polynomial& p, const Integer& prime) {
  const auto pts = valuation_points(p, prime);
  if (pts.size() < 2) throw Error(ErrorCode::DegreeTooLow, "Newton polygon of a constant");
  return lower_hull(pts, prime);
}

std::uint64_t lattice_count(const ValuationPoint& a, const ValuationPoint& b) {
  if (a == b) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  const std::int64_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const std::int64_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return 1 + static_cast<std::uint64_t>(std::gcd(dx, dy));
}

std::vector<PolygonEdge> NewtonPolygon::edges() const {
  std::vector<PolygonEdge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const auto& a = vertices[i - 1];
    const auto& b = vertices[i];
    Rational slope(b.y - a.y, b.x - a.x);
    slope.canonicalize();
    out.push_back({a, b, b.x - a.x, slope, lattice_count(a, b)});
  }
  return out;
}

std::vector<ValuationPoint> NewtonPolygon::lattice_points() const {
  std::vector<ValuationPoint> out;
  for (const auto& e : edges()) {
    const std::int64_t steps = static_cast<std::int64_t>(e.lattice_points) - 1;
    const std::int64_t sx = (e.to.x - e.from.x) / steps;
    const std::int64_t sy = (e.to.y - e.from.y) / steps;
    for (std::int64_t k = 0; k < steps; ++k) out.push_back({e.from.x + k * sx, e.from.y + k * sy});
  }
  if (!vertices.empty()) out.push_back(vertices.back());
  return out;
}

Theorem5Result theorem5_bound(const Polynomial& p, const Integer& prime, std::size_t j) {
  require_end_coefficients(p);
  const std::size_t n = p.degree();
  if (j < 1 || j > n) throw Error(ErrorCode::InvalidArgument, "j must lie in 1..n");
  if (!is_prime(prime)) throw Error(ErrorCode::NotPrime, prime.get_str() + " is not prime");

  std::vector<Valuation> v;
  v.reserve(n + 1);
  for (const auto& a : p.coeffs()) v.push_back(valuation(a, prime));

  if (v[j] != Valuation(0)) return HypothesisFailure{"unit_at_j", j};
  const Integer v0 = to_integer(v[0].value());
  const Integer vn = to_integer(v[n].value());
  for (std::size_t i = 0; i < j; ++i) {
    if (!frac_le(v0, to_integer(j), v[i], to_integer(j - i))) return HypothesisFailure{"lower_slope", i};
  }
  for (std::size_t i = j + 1; i < n; ++i) {
    if (!frac_le(vn, to_integer(n - j), v[i], to_integer(i - j))) return HypothesisFailure{"upper_slope", i};
  }

  DegreeBound b;
  b.source = DegreeBound::Source::Theorem5;
  b.prime = prime;
  b.j = j;
  b.d1 = std::gcd(v[0].value(), static_cast<std::uint64_t>(j));
  b.bound = j / b.d1;
  if (j < n) {
    b.d2 = std::gcd(v[n].value(), static_cast<std::uint64_t>(n - j));
    b.bound = std::min<std::uint64_t>(b.bound, (n - j) / *b.d2);
  }
  return b;
}

DegreeBound best_delta(const Polynomial& p, const FactorBudget& budget) {
  require_end_coefficients(p);
  DegreeBound best = DegreeBound::trivial();
  if (p.degree() == 0) return best;

  // v_p(a_0) = 0 pins d_1 = j and k_f = 1, so only primes of a_0 a_n matter.
  std::set<Integer> primes;
  for (const Integer* a : {&p.constant(), &p.leading()}) {
    if (abs(*a) <= 1) continue;
    for (const auto& f : factorize(*a, budget).factors) primes.insert(f.prime);
  }
  for (const auto& prime : primes) {
    for (std::size_t j = 1; j <= p.degree(); ++j) {
      const auto r = theorem5_bound(p, prime, j);
      if (const auto* b = std::get_if<DegreeBound>(&r); b && b->bound > best.bound) best = *b;
    }
  }
  return best;
}

bool irreducible_by_degree(const Polynomial& p, const DegreeBound& delta) {
  return p.degree() < 2 * delta.bound;
}

}  // namespace polycert
