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
#include <optional>
#include <vector>

#include "polycert/certificate.hpp"
#include "polycert/int_arith.hpp"
#include "polycert/newton.hpp"
#include "polycert/polynomial.hpp"

namespace polycert {

/// Bit flags selecting criteria.
enum CriterionFlag : unsigned {
  kT1 = 1u << 0,
  kT2 = 1u << 1,
  kT3 = 1u << 2,
  kT4 = 1u << 3,
  kL3 = 1u << 4,
  kL4 = 1u << 5,
  kL5 = 1u << 6,
};
inline constexpr unsigned kAllCriteria = kT1 | kT2 | kT3 | kT4 | kL3 | kL4 | kL5;

/// Witness range [start, start + count) for the shifted criteria on a
/// primitive polynomial with a_0 a_n != 0.
struct ScanRequest {
  const Polynomial* poly = nullptr;
  DegreeBound delta;
  Integer start;
  std::uint64_t count = 0;
  unsigned criteria = kAllCriteria;
  FactorBudget budget;
  /// Factorization of |a_n|, shared by every witness.
  const Factorization* leading = nullptr;
};

struct ScanResult {
  /// Certificates in witness order, then T1..T4 within a witness.
  std::vector<Certificate> certificates;
  /// Witnesses examined: count, or the index of the first bound-1 witness + 1.
  std::uint64_t evaluated = 0;
  /// Witnesses where at least one criterion ran out of budget.
  std::uint64_t inconclusive = 0;
  /// Offset of the witness that certified irreducibility, if any.
  std::optional<std::uint64_t> stopped_at;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

struct WitnessResult {
  std::vector<Certificate> certificates;
  bool inconclusive = false;

  bool irreducible() const;
};

/// Runs the enabled shifted criteria at one witness m.
WitnessResult evaluate_witness(const ScanRequest& req, const Integer& m);

/// Reference implementation: ascending scan, stops at the first witness that
/// certifies bound 1.
ScanResult scan_witnesses_serial(const ScanRequest& req);

/// OpenMP scan with the same contract and the same result as the serial one;
/// witnesses past the earliest bound-1 witness found so far are skipped.
/// `threads` <= 0 uses the OpenMP default.
ScanResult scan_witnesses_parallel(const ScanRequest& req, int threads = 0);

}  // namespace polycert
