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

#include <optional>
#include <string>
#include <vector>

#include "polycert/certificate.hpp"
#include "polycert/int_arith.hpp"
#include "polycert/newton.hpp"
#include "polycert/polynomial.hpp"

namespace polycert {

enum class CriterionStatus { Certified, HypothesisFailed, Inconclusive };

/// Certified iff a certificate is present. Inconclusive only means the
/// budget ran out or a root-location premise could not be confirmed.
struct CriterionOutcome {
  CriterionStatus status = CriterionStatus::HypothesisFailed;
  std::optional<Certificate> certificate;
  std::string detail;

  bool certified() const noexcept { return status == CriterionStatus::Certified; }

  static CriterionOutcome certify(Certificate c) {
    return {CriterionStatus::Certified, std::move(c), {}};
  }
  static CriterionOutcome failed(std::string why) {
    return {CriterionStatus::HypothesisFailed, std::nullopt, std::move(why)};
  }
  static CriterionOutcome inconclusive(std::string why) {
    return {CriterionStatus::Inconclusive, std::nullopt, std::move(why)};
  }
};

/// Per-witness cache shared by the four shifted criteria: the Taylor shift at
/// m, the factorization of |f(m)| and the smallest prime of |f(m)| are each
/// computed at most once. The factorization of |a_n| does not depend on m and
/// may be supplied by the caller.
class WitnessContext {
 public:
  WitnessContext(const Polynomial& f, Integer m, FactorBudget budget,
                 const Factorization* leading = nullptr);

  const Polynomial& poly() const noexcept { return f_; }
  const Integer& m() const noexcept { return m_; }
  const FactorBudget& budget() const noexcept { return budget_; }

  const std::vector<Integer>& shift();
  const Factorization& value_factorization();
  const Factorization& leading_factorization();
  /// Smallest prime of |s_0(m)|; nullopt when |s_0(m)| = 1. Throws
  /// BudgetExceeded.
  std::optional<Integer> smallest_value_prime();

 private:
  const Polynomial& f_;
  Integer m_;
  FactorBudget budget_;
  const Factorization* leading_ = nullptr;
  std::optional<std::vector<Integer>> shift_;
  std::optional<Factorization> value_fact_;
  std::optional<Factorization> leading_fact_;
  std::optional<std::optional<Integer>> q_;
};

CriterionOutcome check_theorem1(const Polynomial& f, const Integer& m, const FactorBudget& budget = {});
CriterionOutcome check_theorem2(const Polynomial& f, const Integer& m, const FactorBudget& budget = {});
CriterionOutcome check_theorem3(const Polynomial& f, const Integer& m, const DegreeBound& delta,
                                const FactorBudget& budget = {});
CriterionOutcome check_theorem4(const Polynomial& f, const Integer& m, const DegreeBound& delta,
                                const FactorBudget& budget = {});

CriterionOutcome check_theorem1(WitnessContext& ctx);
CriterionOutcome check_theorem2(WitnessContext& ctx);
CriterionOutcome check_theorem3(WitnessContext& ctx, const DegreeBound& delta);
CriterionOutcome check_theorem4(WitnessContext& ctx, const DegreeBound& delta);

/// Sum_{i>=1} |s_i| rho^i < |s_0|, exactly. True proves every complex zero
/// of g has |z| > rho; false says nothing.
bool root_exclusion(const Polynomial& g, const Rational& rho);

/// Least multiple of 1/10^4 whose delta-th power is at least d.
Rational nth_root_upper(const Integer& d, std::uint64_t delta);

CriterionOutcome check_lemma3_direct(const Polynomial& g, const DegreeBound& delta,
                                     const FactorBudget& budget = {});
CriterionOutcome check_lemma4_direct(const Polynomial& g, const FactorBudget& budget = {});
CriterionOutcome check_lemma5_direct(const Polynomial& g, const DegreeBound& delta,
                                     const FactorBudget& budget = {});

/// Smallest j in 1..n with v_p(c_j) = 0, gcd(k, j) = 1 and
/// k/j < v_p(c_t)/(j - t) for t = 1..j-1, where c_t = s_t, or s_{n-t} when
/// `from_top` is set.
std::optional<std::size_t> smallest_valid_j(const std::vector<Integer>& s, const Integer& p,
                                            std::uint64_t k, bool from_top);

/// (m - 1 - h_f)^delta >= d, evaluated as
/// (|a_n|(m-1) - H)^delta >= d |a_n|^delta with a nonnegative base.
bool root_bound_holds(const Polynomial& f, const Integer& m, std::uint64_t delta, const Integer& d);

/// m >= h_f + 2, evaluated as (m - 2)|a_n| >= H.
bool witness_large_enough(const Polynomial& f, const Integer& m);

/// min_{0<=i<=n} (i + v_p(s_i)).
std::uint64_t constant_side_bound(const std::vector<Integer>& s, const Integer& p);
/// min(k, min_{1<=i<=n} (i + v_p(s_{n-i}))).
std::uint64_t leading_side_bound(const std::vector<Integer>& s, const Integer& p, std::uint64_t k);

}  // namespace polycert
