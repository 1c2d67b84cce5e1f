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

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "polycert/certificate.hpp"
#include "polycert/polynomial.hpp"

namespace polycert {

// Readable test output; gtest would otherwise dump raw bytes of GMP handles.
inline void PrintTo(const PrimeEntry& e, std::ostream* os) {
  *os << "(p=" << e.p.get_str() << ", k=" << e.k << ", j=" << e.j << ")";
}
inline void PrintTo(const Certificate& c, std::ostream* os) { *os << certificate_to_json(c); }

}  // namespace polycert

namespace polycert::fixtures {

/// Upper end of a witness range `width` past the smallest admissible m.
inline Integer window(const Polynomial& f, long width) {
  const PrimitivePart pp = primitive_part(f);
  const Integer lead = abs(pp.primitive.leading());
  return (max_lower_abs(pp.primitive) + lead - 1) / lead + 1 + width;
}

// Worked examples used across the suites.
inline Polynomial three_quadratics() { return {64, 0, 56, 0, 14, 0, 1}; }
inline Polynomial biquadratic() { return {81, 0, 1782, 0, 9797}; }
inline Polynomial quartic() { return {-2, -4, 3, -2, 2}; }
inline Polynomial square_sextic() { return {9, -36, 54, -2094, 4125, -2058, 117649}; }
inline Polynomial f1() { return {1287, 0, 3168, -3528, 1936, -4312, 2401}; }
inline Polynomial f2() { return {4, 0, 120, 0, 899}; }
inline Polynomial f3() { return {4, -16, 32, 4, -56, 72, 81}; }
inline Polynomial f4() { return {2, -2, 2, -375, 100, -100, 100, -18750}; }
inline Polynomial reversal_sextic() { return {-3, 3, 343, 0, -126, 126, 14406}; }
inline Polynomial dominant_sextic() { return {20449, -3146, 121, 13442, -1034, 0, 2209}; }
inline Polynomial unit_circle_sextic() { return {128, 0, 120, 0, -113, 0, -105}; }

inline std::vector<Polynomial> corpus() {
  return {three_quadratics(), biquadratic(), quartic(),         square_sextic(),
          f1(),               f2(),          f3(),              f4(),
          reversal_sextic(),  dominant_sextic(), unit_circle_sextic(), Polynomial{1, 1, 1}};
}

// POLYCERT_SEED overrides the fixed seed of the property tests.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("POLYCERT_SEED")) return std::strtoull(s, nullptr, 0);
  return 20260415;
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(degree + 1);
  for (auto& a : c) a = coeff(rng);
  while (sgn(c.back()) == 0) c.back() = coeff(rng);
  return Polynomial(std::move(c));
}

}  // namespace polycert::fixtures
