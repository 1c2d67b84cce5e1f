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
#include <string>
#include <string_view>
#include <vector>

#include "polycert/newton.hpp"
#include "polycert/polynomial.hpp"

namespace polycert {

/// Which criterion produced a certificate. Declaration order is the
/// preference order used when two certificates claim the same bound.
enum class Theorem { T1, T2, T3, T4, L4, L5, L3, NP };

std::string_view to_string(Theorem t) noexcept;
/// Throws Malformed on an unknown tag.
Theorem theorem_from_string(std::string_view tag);

enum class PrimeCertainty { Deterministic, Probable };

/// (p_i, k_i, j_i). For the single-prime criteria (T3, T4, L3, L5) j is 0.
struct PrimeEntry {
  Integer p;
  std::uint64_t k = 0;
  std::size_t j = 0;

  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

/// Self-contained record of one successful criterion application. `poly` is
/// the primitive polynomial the criterion speaks about; the analyzed input is
/// content * poly. When `reversed` is set the criterion was applied to
/// reverse(poly), which has the same factor structure.
struct Certificate {
  Theorem theorem = Theorem::T1;
  Polynomial poly;
  Integer content{1};
  std::optional<Integer> m;
  bool reversed = false;
  int sign = 1;
  std::vector<PrimeEntry> primes;
  std::optional<Integer> d;
  std::optional<Integer> q;
  /// Absent means the trivial bound 1.
  std::optional<DegreeBound> delta;
  std::uint64_t bound = 1;
  PrimeCertainty prime_certainty = PrimeCertainty::Deterministic;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Strict weak order: smaller bound first, then theorem preference, then
/// smaller witness m.
bool better_than(const Certificate& a, const Certificate& b);

std::string certificate_to_json(const Certificate& cert, int indent = -1);
/// Throws Malformed on schema violations.
Certificate certificate_from_json(std::string_view text);

}  // namespace polycert
