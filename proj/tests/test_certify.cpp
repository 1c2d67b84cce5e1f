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

#include <json.hpp>

#include "fixtures.hpp"
#include "mutations.hpp"
#include "polycert/certify.hpp"
#include "polycert/criteria.hpp"
#include "polycert/error.hpp"

namespace polycert {
namespace {

AnalysisConfig up_to(long m_max) {
  AnalysisConfig cfg;
  cfg.m_max = m_max;
  return cfg;
}

AnalysisConfig window_of(const Polynomial& f) {
  AnalysisConfig cfg;
  cfg.m_max = fixtures::window(f, 60);
  return cfg;
}

const Certificate* find(const AnalysisReport& r, Theorem t, long m) {
  for (const auto& c : r.all_certificates) {
    if (c.theorem == t && c.m == std::optional<Integer>(m)) return &c;
  }
  return nullptr;
}

TEST(Analyze, ThreeQuadratics) {
  const auto r = analyze(fixtures::three_quadratics(), up_to(200));
  EXPECT_EQ(r.verdict, Verdict::AtMost);
  ASSERT_TRUE(r.best);
  EXPECT_EQ(r.best->bound, 3u);
  EXPECT_EQ(verdict_string(r), "AtMost(3)");
  const Certificate* c = find(r, Theorem::T1, 117);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->bound, 3u);
}

TEST(Analyze, SquareSexticReachesBoundTwoWithT4At7) {
  const auto r = analyze(fixtures::square_sextic(), up_to(10));
  EXPECT_EQ(r.verdict, Verdict::AtMost);
  EXPECT_EQ(r.bound(), 2u);
  EXPECT_EQ(r.delta.bound, 3u);
  const Certificate* c = find(r, Theorem::T4, 7);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->bound, 2u);
}

TEST(Analyze, PrimeValueIsIrreducible) {
  const auto r = analyze(Polynomial{1, 1, 1}, up_to(10));
  EXPECT_EQ(r.verdict, Verdict::Irreducible);
  EXPECT_EQ(r.bound(), 1u);
  EXPECT_EQ(verdict_string(r), "Irreducible");
}

TEST(Analyze, EisensteinStopsBeforeTheScan) {
  const auto r = analyze(Polynomial{2, 2, 0, 1}, up_to(10));
  EXPECT_EQ(r.verdict, Verdict::Irreducible);
  ASSERT_TRUE(r.best);
  EXPECT_EQ(r.best->theorem, Theorem::NP);
  EXPECT_EQ(r.tried_m, 0u);
}

TEST(Analyze, BiquadraticKeepsT2Witness) {
  const auto r = analyze(fixtures::biquadratic(), up_to(20));
  EXPECT_EQ(r.bound(), 2u);
  const Certificate* c = find(r, Theorem::T2, 8);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->q, std::optional<Integer>(6217));
}

TEST(Analyze, ContentIsExtracted) {
  const auto r = analyze(scale(Polynomial{1, 1, 1}, 6), up_to(10));
  EXPECT_EQ(r.content, 6);
  EXPECT_EQ(r.poly, (Polynomial{1, 1, 1}));
  ASSERT_TRUE(r.best);
  EXPECT_EQ(r.best->content, 6);
  EXPECT_TRUE(verify_certificate(scale(Polynomial{1, 1, 1}, 6), *r.best).pass);
}

TEST(Analyze, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { analyze(Polynomial{}); }), ErrorCode::ZeroPolynomial);
  EXPECT_EQ(code_of([] { analyze(Polynomial{5}); }), ErrorCode::DegreeTooLow);
  EXPECT_EQ(code_of([] { analyze(Polynomial{0, 1, 1}); }), ErrorCode::ZeroEndCoefficient);
  AnalysisConfig cfg;
  cfg.m_min = 10;
  cfg.m_max = 5;
  EXPECT_EQ(code_of([&] { analyze(fixtures::three_quadratics(), cfg); }), ErrorCode::EmptyRange);
}

TEST(Analyze, SerialAndParallelAgree) {
  for (const auto& f : fixtures::corpus()) {
    AnalysisConfig a, b;
    a.m_max = b.m_max = fixtures::window(f, 60);
    a.parallel = false;
    b.parallel = true;
    b.threads = 4;
    const auto ra = analyze(f, a), rb = analyze(f, b);
    EXPECT_EQ(ra.all_certificates, rb.all_certificates) << to_string(f);
    EXPECT_EQ(ra.best, rb.best);
  }
}

TEST(Analyze, ScanStopsAtFirstIrreducibleWitness) {
  // The lemmas settle 1 + z + z^2 directly, so restrict to T1.
  AnalysisConfig cfg = up_to(400);
  cfg.criteria = kT1;
  const auto r = analyze(Polynomial{1, 1, 1}, cfg);
  EXPECT_EQ(r.verdict, Verdict::Irreducible);
  EXPECT_LT(r.tried_m, 399u);
  EXPECT_EQ(r.m_to - r.m_from + 1, Integer(static_cast<unsigned long>(r.tried_m)));
}

TEST(Analyze, CriteriaMask) {
  AnalysisConfig cfg = up_to(20);
  cfg.criteria = kT2;
  const auto r = analyze(fixtures::biquadratic(), cfg);
  for (const auto& c : r.all_certificates) EXPECT_EQ(c.theorem, Theorem::T2);
  EXPECT_EQ(r.bound(), 2u);
}

TEST(ReportJson, CarriesVerdictAndBest) {
  const auto r = analyze(fixtures::biquadratic(), up_to(20));
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["schema"], "polycert-report-1");
  EXPECT_EQ(j["verdict"]["kind"], "AtMost");
  EXPECT_EQ(j["verdict"]["bound"], 2);
  EXPECT_EQ(certificate_from_json(j["best"].dump()), *r.best);
  EXPECT_EQ(j["all_certificates"].size(), r.all_certificates.size());
}

TEST(CertificateJson, RoundTripsFixtures) {
  for (const auto& f : fixtures::corpus()) {
    const auto r = analyze(f, window_of(f));
    for (const auto& c : r.all_certificates) {
      EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
      EXPECT_EQ(certificate_from_json(certificate_to_json(c, 2)), c);
    }
  }
}

TEST(CertificateJson, ThousandDigitIntegers) {
  Certificate c;
  c.theorem = Theorem::T3;
  std::string big(1000, '7');
  c.poly = Polynomial(std::vector<Integer>{Integer(big), Integer("-" + big + "1"), 1});
  c.m = Integer(big + "3");
  c.primes = {{Integer(big), 3, 0}};
  c.d = Integer(big + "9");
  c.bound = 4;
  EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
  const auto j = nlohmann::json::parse(certificate_to_json(c));
  EXPECT_EQ(j["m"].get<std::string>().size(), 1001u);
}

TEST(CertificateJson, RejectsSchemaViolations) {
  const std::string good = certificate_to_json(*check_theorem1(Polynomial{1, 1, 1}, 3).certificate);
  auto with = [&](const std::function<void(nlohmann::json&)>& edit) {
    auto j = nlohmann::json::parse(good);
    edit(j);
    return j.dump();
  };
  auto malformed = [](const std::string& text) {
    try {
      certificate_from_json(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::Malformed;
    }
    return false;
  };
  EXPECT_FALSE(malformed(good));
  EXPECT_TRUE(malformed(with([](auto& j) { j["theorem"] = "T9"; })));
  EXPECT_TRUE(malformed(with([](auto& j) { j["schema"] = "other"; })));
  EXPECT_TRUE(malformed(with([](auto& j) { j["m"] = 3; })));
  EXPECT_TRUE(malformed(with([](auto& j) { j["poly"][0] = "1x"; })));
  EXPECT_TRUE(malformed(with([](auto& j) { j.erase("primes"); })));
  EXPECT_TRUE(malformed(with([](auto& j) { j["sign"] = 0; })));
  EXPECT_TRUE(malformed(with([](auto& j) { j["bound"] = 0; })));
  EXPECT_TRUE(malformed("{not json"));
}

TEST(Verify, AcceptsEveryEmittedCertificate) {
  for (const auto& f : fixtures::corpus()) {
    const auto r = analyze(f, window_of(f));
    for (const auto& c : r.all_certificates) {
      const auto v = verify_certificate(f, c);
      EXPECT_TRUE(v.pass) << to_string(f) << " " << to_string(c.theorem) << " failed " << v.failed;
    }
  }
}

TEST(Verify, AcceptsDirectLemmaCertificates) {
  const Polynomial g = reverse(fixtures::reversal_sextic());
  const DegreeBound d = std::get<DegreeBound>(theorem5_bound(fixtures::reversal_sextic(), 3, 2));
  const auto l3 = check_lemma3_direct(g, d);
  ASSERT_TRUE(l3.certified());
  EXPECT_TRUE(verify_certificate(g, *l3.certificate).pass);

  const Polynomial f = fixtures::dominant_sextic();
  const auto l5 = check_lemma5_direct(f, std::get<DegreeBound>(theorem5_bound(f, 11, 6)));
  ASSERT_TRUE(l5.certified());
  EXPECT_TRUE(verify_certificate(f, *l5.certificate).pass);

  const Polynomial s(taylor_shift(fixtures::biquadratic(), 8).s);
  const auto l4 = check_lemma4_direct(s);
  ASSERT_TRUE(l4.certified());
  EXPECT_TRUE(verify_certificate(s, *l4.certificate).pass);
}

TEST(Verify, MutatedJIsRejected) {
  auto c = *check_theorem2(fixtures::biquadratic(), 8).certificate;
  ASSERT_EQ(c.primes[0].j, 2u);
  c.primes[0].j = 3;
  const auto v = verify_certificate(fixtures::biquadratic(), c);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failed, "slope_condition");
}

TEST(Verify, RejectsWrongPolynomial) {
  const auto c = *check_theorem1(fixtures::three_quadratics(), 117).certificate;
  const auto v = verify_certificate(fixtures::f3(), c);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failed, "polynomial_mismatch");
}

TEST(Verify, StructuralProblemsAreMalformed) {
  auto c = *check_theorem1(fixtures::three_quadratics(), 117).certificate;
  c.m.reset();
  EXPECT_THROW(verify_certificate(fixtures::three_quadratics(), c), Error);
  auto d = *check_theorem2(fixtures::biquadratic(), 8).certificate;
  d.q.reset();
  EXPECT_THROW(verify_certificate(fixtures::biquadratic(), d), Error);
}

TEST(Verify, SingleFieldMutationsAreRejected) {
  std::size_t total = 0;
  for (const auto& f : fixtures::corpus()) {
    const auto r = analyze(f, window_of(f));
    for (const auto& c : r.all_certificates) {
      for (const auto& m : mutations::single_field(c)) {
        ++total;
        EXPECT_TRUE(mutations::rejected(f, m.cert)) << to_string(f) << " " << to_string(c.theorem) << " " << m.what;
      }
    }
  }
  EXPECT_GT(total, 100u);
}

}  // namespace
}  // namespace polycert
