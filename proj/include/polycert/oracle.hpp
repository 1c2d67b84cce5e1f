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
#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

/// Brute-force ground truth for small inputs. Never used on the certifying
/// path.
struct OracleLimits {
  std::size_t max_degree = 8;
  /// Largest admissible |a_i|.
  Integer coeff_cap{1000000000};
  /// Candidate factors tried per degree before giving up.
  std::uint64_t max_candidates = 1000000;
};

/// input = unit * content * prod(factors); every factor is primitive with a
/// positive leading coefficient and irreducible over the integers. Factors
/// are sorted by degree, then lexicographically by coefficients.
struct OracleFactorization {
  int unit = 1;
  Integer content{1};
  std::vector<Polynomial> factors;
};

/// Rational-root stripping followed by Kronecker interpolation. Throws
/// ZeroPolynomial, OracleScaleExceeded (degree or coefficient over the
/// limits) and OracleBudgetExceeded.
OracleFactorization oracle_factor(const Polynomial& f, const OracleLimits& limits = {});

/// Number of irreducible factors with multiplicity. Throws DegreeTooLow for
/// constants.
std::size_t oracle_count(const Polynomial& f, const OracleLimits& limits = {});

/// Canonical factor order: degree, then coefficients a_0, a_1, ...
bool oracle_factor_less(const Polynomial& a, const Polynomial& b);

}  // namespace polycert
