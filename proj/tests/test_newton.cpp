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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "polycert/error.hpp"
#include "polycert/newton.hpp"

namespace polycert {
namespace {

using Points = std::vector<ValuationPoint>;

DegreeBound expect_bound(const Polynomial& f, long prime, std::size_t j) {
  const auto r = theorem5_bound(f, prime, j);
  if (const auto* b = std::get_if<DegreeBound>(&r)) return *b;
  ADD_FAILURE() << "hypothesis failed: " << std::get<HypothesisFailure>(r).condition;
  return {};
}

TEST(Newton, ValuationPoints) {
  EXPECT_EQ(valuation_points(fixtures::quartic(), 2), (Points{{0, 1}, {1, 2}, {2, 0}, {3, 1}, {4, 1}}));
  EXPECT_EQ(valuation_points(fixtures::f3(), 2), (Points{{0, 2}, {1, 4}, {2, 5}, {3, 2}, {4, 3}, {5, 3}, {6, 0}}));
  EXPECT_EQ(valuation_points(Polynomial{1, 0, 1}, 3), (Points{{0, 0}, {2, 0}}));
  try {
    valuation_points(Polynomial{0, 1}, 2);
    FAIL() << "a_0 = 0 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroEndCoefficient);
  }
}

TEST(Newton, LowerHullExamples) {
  EXPECT_EQ(newton_polygon(fixtures::quartic(), 2).vertices, (Points{{0, 1}, {2, 0}, {4, 1}}));
  EXPECT_EQ(newton_polygon(fixtures::f3(), 2).vertices, (Points{{0, 2}, {6, 0}}));
  const Points two{{0, 3}, {5, 1}};
  EXPECT_EQ(lower_hull(two).vertices, two);
}

TEST(Newton, EdgesCarrySlopeAndLatticeCount) {
  const auto edges = newton_polygon(fixtures::f3(), 2).edges();
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].width, 6);
  EXPECT_EQ(edges[0].slope, Rational(-1, 3));
  EXPECT_EQ(edges[0].lattice_points, 3u);
  const auto pts = newton_polygon(fixtures::f3(), 2).lattice_points();
  EXPECT_EQ(pts, (Points{{0, 2}, {3, 1}, {6, 0}}));
}

TEST(Newton, LatticeCount) {
  EXPECT_EQ(lattice_count({0, 2}, {6, 0}), 3u);
  EXPECT_EQ(lattice_count({0, 0}, {1, 1}), 2u);
  try {
    lattice_count({1, 1}, {1, 1});
    FAIL() << "degenerate segment accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSegment);
  }
}

// Count by walking every integer x between the endpoints.
std::uint64_t enumerate_segment(const ValuationPoint& a, const ValuationPoint& b) {
  if (a.x == b.x) return static_cast<std::uint64_t>(std::abs(a.y - b.y)) + 1;
  std::uint64_t count = 0;
  const std::int64_t lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
  for (std::int64_t x = lo; x <= hi; ++x) {
    const std::int64_t num = (b.y - a.y) * (x - a.x);
    if (num % (b.x - a.x) == 0) ++count;
  }
  return count;
}

TEST(Newton, LatticeCountMatchesEnumeration) {
  std::uint64_t checked = 0;
  const ValuationPoint origin{0, 0};
  for (std::int64_t x = 0; x <= 50; ++x) {
    for (std::int64_t y = 0; y <= 50; ++y) {
      const ValuationPoint b{x, y};
      if (b == origin) continue;
      ASSERT_EQ(lattice_count(origin, b), enumerate_segment(origin, b)) << x << "," << y;
      ++checked;
    }
  }
  // Arbitrary endpoints, a seeded sample of the full coordinate box.
  std::mt19937_64 rng(fixtures::test_seed());
  std::uniform_int_distribution<std::int64_t> c(0, 50);
  for (int i = 0; i < 20000; ++i) {
    const ValuationPoint a{c(rng), c(rng)}, b{c(rng), c(rng)};
    if (a == b) continue;
    ASSERT_EQ(lattice_count(a, b), enumerate_segment(a, b));
    ++checked;
  }
  EXPECT_GT(checked, 20000u);
}

TEST(Newton, HullIsLowerConvexOnRandomPoints) {
  std::mt19937_64 rng(fixtures::test_seed());
  std::uniform_int_distribution<std::int64_t> y(0, 12);
  std::uniform_int_distribution<std::int64_t> len(1, 20);
  std::bernoulli_distribution keep(0.6);
  for (int iter = 0; iter < 100; ++iter) {
    const std::int64_t n = len(rng);
    Points pts{{0, y(rng)}};
    for (std::int64_t x = 1; x < n; ++x) {
      if (keep(rng)) pts.push_back({x, y(rng)});
    }
    pts.push_back({n, y(rng)});
    const auto hull = lower_hull(pts).vertices;
    ASSERT_GE(hull.size(), 2u);
    EXPECT_EQ(hull.front(), pts.front());
    EXPECT_EQ(hull.back(), pts.back());
    // Strictly increasing slopes.
    for (std::size_t i = 2; i < hull.size(); ++i) {
      const auto& a = hull[i - 2];
      const auto& b = hull[i - 1];
      const auto& c2 = hull[i];
      EXPECT_LT((b.y - a.y) * (c2.x - b.x), (c2.y - b.y) * (b.x - a.x));
    }
    // Every point on or above the hull.
    for (const auto& p : pts) {
      for (std::size_t i = 1; i < hull.size(); ++i) {
        const auto& a = hull[i - 1];
        const auto& b = hull[i];
        if (p.x < a.x || p.x > b.x) continue;
        EXPECT_GE((p.y - a.y) * (b.x - a.x), (b.y - a.y) * (p.x - a.x));
      }
    }
    // Each vertex is an input point.
    for (const auto& v : hull) EXPECT_NE(std::find(pts.begin(), pts.end(), v), pts.end());
  }
}

TEST(Newton, Theorem5Witnesses) {
  auto b = expect_bound(fixtures::quartic(), 2, 2);
  EXPECT_EQ(b.bound, 2u);
  EXPECT_EQ(b.d1, 1u);
  EXPECT_EQ(b.d2, std::optional<std::uint64_t>(1));

  b = expect_bound(fixtures::square_sextic(), 3, 6);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_EQ(b.d1, 2u);
  EXPECT_FALSE(b.d2.has_value());

  b = expect_bound(fixtures::f3(), 2, 6);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_EQ(b.d1, 2u);

  b = expect_bound(fixtures::f4(), 2, 3);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_EQ(b.d1, 1u);
  EXPECT_EQ(b.d2, std::optional<std::uint64_t>(1));

  b = expect_bound(fixtures::reversal_sextic(), 3, 2);
  EXPECT_EQ(b.bound, 2u);
  EXPECT_EQ(b.d1, 1u);
  EXPECT_EQ(b.d2, std::optional<std::uint64_t>(1));

  b = expect_bound(fixtures::dominant_sextic(), 11, 6);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_EQ(b.d1, 2u);
}

TEST(Newton, Theorem5HypothesisFailures) {
  auto r = theorem5_bound(fixtures::quartic(), 2, 1);
  ASSERT_TRUE(std::holds_alternative<HypothesisFailure>(r));
  EXPECT_EQ(std::get<HypothesisFailure>(r).condition, "unit_at_j");
  // 2 | a_0 with the unit at j = 2 but a_1 sits below the line.
  r = theorem5_bound(Polynomial{8, 2, 1}, 2, 2);
  ASSERT_TRUE(std::holds_alternative<HypothesisFailure>(r));
  EXPECT_EQ(std::get<HypothesisFailure>(r).condition, "lower_slope");
  r = theorem5_bound(Polynomial{1, 1, 2, 8}, 2, 1);
  ASSERT_TRUE(std::holds_alternative<HypothesisFailure>(r));
  EXPECT_EQ(std::get<HypothesisFailure>(r).condition, "upper_slope");
  EXPECT_THROW(theorem5_bound(fixtures::quartic(), 2, 5), Error);
}

TEST(Newton, BestDelta) {
  EXPECT_EQ(best_delta(fixtures::quartic()).bound, 2u);
  EXPECT_EQ(best_delta(fixtures::square_sextic()).bound, 3u);
  EXPECT_EQ(best_delta(fixtures::f3()).bound, 3u);
  EXPECT_EQ(best_delta(fixtures::f4()).bound, 3u);
  EXPECT_EQ(best_delta(fixtures::reversal_sextic()).bound, 2u);
  EXPECT_EQ(best_delta(fixtures::dominant_sextic()).bound, 3u);
  EXPECT_TRUE(best_delta(Polynomial{1, 1, 1}).is_trivial());
}

TEST(Newton, EisensteinGivesFullDegree) {
  // 2 + 2z + z^3 is Eisenstein at 2: every factor has degree 3.
  const Polynomial f{2, 2, 0, 1};
  const DegreeBound b = best_delta(f);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_TRUE(irreducible_by_degree(f, b));
}

TEST(Newton, IrreducibleByDegreeIsStrict) {
  // deg 6 = 2 * 3 still allows two cubic factors; both are squares of cubics.
  EXPECT_FALSE(irreducible_by_degree(fixtures::square_sextic(), best_delta(fixtures::square_sextic())));
  EXPECT_FALSE(irreducible_by_degree(fixtures::f3(), best_delta(fixtures::f3())));
  DegreeBound three;
  three.bound = 3;
  EXPECT_TRUE(irreducible_by_degree(Polynomial{1, 0, 0, 0, 0, 1}, three));
}

}  // namespace
}  // namespace polycert
