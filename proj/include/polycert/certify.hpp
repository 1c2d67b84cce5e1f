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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycert/certificate.hpp"
#include "polycert/int_arith.hpp"
#include "polycert/newton.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/scan.hpp"

namespace polycert {

struct AnalysisConfig {
  std::optional<Integer> m_min;
  /// Defaults to ceil(h_f) + 1000.
  std::optional<Integer> m_max;
  std::chrono::milliseconds factor_budget{2000};
  unsigned criteria = kAllCriteria;
  std::uint64_t seed = default_seed();
  bool parallel = true;
  int threads = 0;
};

enum class Verdict { Irreducible, AtMost, Unknown };

struct PhaseTiming {
  double delta_ms = 0;
  double lemmas_ms = 0;
  double scan_ms = 0;
};

struct AnalysisReport {
  Polynomial input;
  /// Primitive part of the input; every certificate speaks about it.
  Polynomial poly;
  Integer content{1};
  DegreeBound delta;
  std::optional<Certificate> best;
  std::vector<Certificate> all_certificates;
  /// Witness range actually scanned; empty when the scan was skipped.
  Integer m_from{0};
  Integer m_to{-1};
  std::uint64_t tried_m = 0;
  std::uint64_t inconclusive = 0;
  Verdict verdict = Verdict::Unknown;
  PhaseTiming timing;

  /// The certified bound when verdict != Unknown.
  std::uint64_t bound() const { return best ? best->bound : 0; }
};

/// Orchestrates Theorem 5, the direct lemmas on f and reverse(f), and the
/// witness scan. Throws ZeroPolynomial, DegreeTooLow, ZeroEndCoefficient and
/// EmptyRange.
AnalysisReport analyze(const Polynomial& f, const AnalysisConfig& config = {});

std::string verdict_string(const AnalysisReport& r);
std::string report_to_json(const AnalysisReport& r, int indent = -1);

struct VerificationReport {
  bool pass = false;
  /// First violated condition when !pass.
  std::string failed;
};

/// Re-derives every arithmetic condition of the certificate's criterion from
/// f and the recorded witnesses. Throws Malformed for structurally invalid
/// certificates.
VerificationReport verify_certificate(const Polynomial& f, const Certificate& cert);

}  // namespace polycert
