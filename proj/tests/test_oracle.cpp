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
#include <random>

#include "fixtures.hpp"
#include "polycert/error.hpp"
#include "polycert/oracle.hpp"

namespace polycert {
namespace {

Polynomial product(const std::vector<Polynomial>& fs) {
  Polynomial out{1};
  for (const auto& f : fs) out = multiply(out, f);
  return out;
}

Polynomial reassemble(const OracleFactorization& r) {
  return scale(product(r.factors), r.content * r.unit);
}

// Degree <= 3 with no rational root is irreducible; checked by brute force
// over p/q with p | a_0, q | a_n.
bool small_irreducible(const Polynomial& f) {
  if (f.degree() == 0) return false;
  if (content(f) != 1) return false;
  if (f.degree() == 1) return true;
  if (sgn(f.constant()) == 0) return false;
  const Integer a0 = abs(f.constant()), an = abs(f.leading());
  for (Integer q = 1; q <= an; ++q) {
    if (an % q != 0) continue;
    for (Integer p = 1; p <= a0; ++p) {
      if (a0 % p != 0) continue;
      for (const Integer& pp : {Integer(p), Integer(-p)}) {
        // q^n f(p/q)
        Integer acc = 0, ppow = 1;
        std::vector<Integer> qp(f.degree() + 1, 1);
        for (std::size_t i = 1; i <= f.degree(); ++i) qp[i] = qp[i - 1] * q;
        for (std::size_t i = 0; i <= f.degree(); ++i) {
          acc += f.coeffs()[i] * ppow * qp[f.degree() - i];
          ppow *= pp;
        }
        if (acc == 0) return false;
      }
    }
  }
  return true;
}

Polynomial normalized(Polynomial f) { return sgn(f.leading()) < 0 ? scale(f, Integer(-1)) : f; }

TEST(Oracle, ThreeQuadratics) {
  const auto r = oracle_factor(fixtures::three_quadratics());
  ASSERT_EQ(r.factors.size(), 3u);
  EXPECT_EQ(r.factors[0], (Polynomial{2, 0, 1}));
  EXPECT_EQ(r.factors[1], (Polynomial{4, 0, 1}));
  EXPECT_EQ(r.factors[2], (Polynomial{8, 0, 1}));
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_count(fixtures::f4()), 2u);
  EXPECT_EQ(oracle_count(Polynomial{-1, 0, 1}), 2u);
  EXPECT_EQ(oracle_count(fixtures::f3()), 2u);
  EXPECT_EQ(oracle_count(fixtures::square_sextic()), 2u);
  EXPECT_EQ(oracle_count(fixtures::biquadratic()), 2u);
  EXPECT_EQ(oracle_count(Polynomial{1, 1, 1}), 1u);
  EXPECT_EQ(oracle_count(Polynomial{0, 0, 1}), 2u);
  EXPECT_EQ(oracle_count(Polynomial{4, 0, 0, 0, 1}), 2u);  // Sophie Germain
}

TEST(Oracle, UnitAndContent) {
  const auto r = oracle_factor(Polynomial{6, 0, -6});
  EXPECT_EQ(r.unit, -1);
  EXPECT_EQ(r.content, 6);
  EXPECT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(reassemble(r), (Polynomial{6, 0, -6}));
}

TEST(Oracle, ReassemblesCorpus) {
  for (const auto& f : fixtures::corpus()) {
    const auto r = oracle_factor(f);
    EXPECT_EQ(reassemble(r), f) << to_string(f);
    EXPECT_TRUE(std::is_sorted(r.factors.begin(), r.factors.end(), oracle_factor_less));
    for (const auto& g : r.factors) {
      EXPECT_EQ(content(g), 1);
      EXPECT_GT(sgn(g.leading()), 0);
      EXPECT_EQ(oracle_count(g), 1u) << to_string(g);
    }
  }
}

TEST(Oracle, RandomProductsRecoverTheirFactors) {
  std::mt19937_64 rng(fixtures::test_seed());
  std::uniform_int_distribution<int> nfac(1, 3), deg(1, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Polynomial> fs;
    std::size_t total = 0;
    const int want = nfac(rng);
    while (static_cast<int>(fs.size()) < want) {
      const std::size_t d = static_cast<std::size_t>(deg(rng));
      if (total + d > 8) break;
      const Polynomial g = normalized(fixtures::random_poly(rng, d, 10));
      if (!small_irreducible(g)) continue;
      fs.push_back(g);
      total += d;
    }
    if (fs.empty()) continue;
    std::sort(fs.begin(), fs.end(), oracle_factor_less);
    const auto r = oracle_factor(product(fs));
    EXPECT_EQ(r.content, 1);
    EXPECT_EQ(r.factors, fs) << to_string(product(fs));
  }
}

TEST(Oracle, Idempotent) {
  const auto a = oracle_factor(fixtures::f1());
  const auto b = oracle_factor(fixtures::f1());
  EXPECT_EQ(a.factors, b.factors);
}

TEST(Oracle, ScaleLimits) {
  auto code_of = [](const Polynomial& f) {
    try {
      oracle_factor(f);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of(Polynomial{1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), ErrorCode::OracleScaleExceeded);
  EXPECT_EQ(code_of(Polynomial(std::vector<Integer>{Integer("10000000001"), 1})), ErrorCode::OracleScaleExceeded);
  EXPECT_EQ(code_of(Polynomial{}), ErrorCode::ZeroPolynomial);
  EXPECT_THROW(oracle_count(Polynomial{7}), Error);
}

TEST(Oracle, CandidateCap) {
  OracleLimits tight;
  tight.max_candidates = 5;
  try {
    oracle_factor(fixtures::f1(), tight);
    FAIL() << "expected OracleBudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleBudgetExceeded);
  }
}

}  // namespace
}  // namespace polycert
