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

#include "polycert/certify.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "polycert/criteria.hpp"
#include "polycert/error.hpp"

namespace polycert {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Integer ceil_height(const Polynomial& g) {
  Integer q;
  const Integer lead = abs(g.leading());
  mpz_cdiv_q(q.get_mpz_t(), max_lower_abs(g).get_mpz_t(), lead.get_mpz_t());
  return q;
}

void select_best(AnalysisReport& r) {
  r.best.reset();
  for (const auto& c : r.all_certificates) {
    if (!r.best || better_than(c, *r.best)) r.best = c;
  }
  if (!r.best) {
    r.verdict = Verdict::Unknown;
  } else {
    r.verdict = r.best->bound == 1 ? Verdict::Irreducible : Verdict::AtMost;
  }
}

void run_lemmas(AnalysisReport& r, const AnalysisConfig& cfg, const FactorBudget& budget) {
  const Polynomial& g = r.poly;
  const Polynomial rev = reverse(g);
  for (const bool reversed : {false, true}) {
    const Polynomial& target = reversed ? rev : g;
    std::vector<CriterionOutcome> outcomes;
    if (cfg.criteria & kL4) outcomes.push_back(check_lemma4_direct(target, budget));
    if (cfg.criteria & kL5) outcomes.push_back(check_lemma5_direct(target, r.delta, budget));
    if (cfg.criteria & kL3) outcomes.push_back(check_lemma3_direct(target, r.delta, budget));
    for (auto& o : outcomes) {
      if (o.status == CriterionStatus::Inconclusive && o.detail != "root_location_unverified") ++r.inconclusive;
      if (!o.certified()) continue;
      Certificate c = std::move(*o.certificate);
      c.poly = g;
      c.reversed = reversed;
      c.content = r.content;
      r.all_certificates.push_back(std::move(c));
    }
  }
}

}  // namespace

AnalysisReport analyze(const Polynomial& f, const AnalysisConfig& cfg) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "analyze");
  AnalysisReport r;
  r.input = f;
  auto pp = primitive_part(f);
  r.content = pp.content;
  r.poly = std::move(pp.primitive);
  const Polynomial& g = r.poly;
  if (g.degree() == 0) throw Error(ErrorCode::DegreeTooLow, "analyze needs a nonconstant polynomial");
  if (sgn(g.constant()) == 0) throw Error(ErrorCode::ZeroEndCoefficient, "a_0 = 0; divide out z first");
  if (cfg.m_min && cfg.m_max && *cfg.m_min > *cfg.m_max) throw Error(ErrorCode::EmptyRange, "m_min > m_max");

  const FactorBudget budget{cfg.factor_budget, cfg.seed};

  auto t0 = Clock::now();
  r.delta = best_delta(g, budget);
  r.timing.delta_ms = elapsed_ms(t0);

  if (irreducible_by_degree(g, r.delta)) {
    Certificate c;
    c.theorem = Theorem::NP;
    c.poly = g;
    c.content = r.content;
    if (!r.delta.is_trivial()) c.delta = r.delta;
    c.bound = 1;
    c.prime_certainty = r.delta.prime >= deterministic_bound() ? PrimeCertainty::Probable
                                                                : PrimeCertainty::Deterministic;
    r.all_certificates.push_back(std::move(c));
    select_best(r);
    return r;
  }

  t0 = Clock::now();
  run_lemmas(r, cfg, budget);
  r.timing.lemmas_ms = elapsed_ms(t0);
  select_best(r);
  if (r.verdict == Verdict::Irreducible) return r;

  const Integer floor_m = ceil_height(g) + 2;
  const Integer start = cfg.m_min ? std::max(*cfg.m_min, floor_m) : floor_m;
  const Integer end = cfg.m_max ? *cfg.m_max : ceil_height(g) + 1000;
  if (start > end) throw Error(ErrorCode::EmptyRange, "no witness m in [" + start.get_str() + ", " + end.get_str() + "]");
  const Integer span = end - start + 1;
  if (mpz_sizeinbase(span.get_mpz_t(), 2) > 62) throw Error(ErrorCode::InvalidArgument, "witness range too large");

  const Factorization leading = factorize(g.leading(), budget);
  ScanRequest req;
  req.poly = &g;
  req.delta = r.delta;
  req.start = start;
  req.count = span.get_ui();
  req.criteria = cfg.criteria;
  req.budget = budget;
  req.leading = &leading;

  t0 = Clock::now();
  ScanResult scan = cfg.parallel ? scan_witnesses_parallel(req, cfg.threads) : scan_witnesses_serial(req);
  r.timing.scan_ms = elapsed_ms(t0);

  r.m_from = start;
  r.m_to = start + to_integer(scan.evaluated) - 1;
  r.tried_m = scan.evaluated;
  r.inconclusive += scan.inconclusive;
  for (auto& c : scan.certificates) {
    c.content = r.content;
    r.all_certificates.push_back(std::move(c));
  }
  select_best(r);
  return r;
}

std::string verdict_string(const AnalysisReport& r) {
  switch (r.verdict) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::AtMost: return "AtMost(" + std::to_string(r.bound()) + ")";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string report_to_json(const AnalysisReport& r, int indent) {
  using nlohmann::json;
  json j;
  j["schema"] = "polycert-report-1";
  json input = json::array();
  for (const auto& a : r.input.coeffs()) input.push_back(a.get_str());
  j["input"] = std::move(input);
  json poly = json::array();
  for (const auto& a : r.poly.coeffs()) poly.push_back(a.get_str());
  j["poly"] = std::move(poly);
  j["content"] = r.content.get_str();
  if (r.delta.is_trivial()) {
    j["delta"] = {{"bound", 1}, {"source", "trivial"}};
  } else {
    j["delta"] = {{"bound", r.delta.bound},       {"source", "T5"},
                  {"p", r.delta.prime.get_str()}, {"j", r.delta.j},
                  {"d1", r.delta.d1},             {"d2", r.delta.d2.value_or(0)}};
  }
  j["verdict"] = {{"kind", r.verdict == Verdict::Irreducible ? "Irreducible"
                           : r.verdict == Verdict::AtMost    ? "AtMost"
                                                             : "Unknown"},
                  {"bound", r.best ? json(r.best->bound) : json(nullptr)}};
  j["best"] = r.best ? json::parse(certificate_to_json(*r.best)) : json(nullptr);
  json all = json::array();
  for (const auto& c : r.all_certificates) all.push_back(json::parse(certificate_to_json(c)));
  j["all_certificates"] = std::move(all);
  j["tried_m"] = {{"from", r.m_from.get_str()}, {"to", r.m_to.get_str()}, {"count", r.tried_m}};
  j["inconclusive"] = r.inconclusive;
  j["timing_ms"] = {{"delta", r.timing.delta_ms}, {"lemmas", r.timing.lemmas_ms}, {"scan", r.timing.scan_ms}};
  return j.dump(indent);
}

}  // namespace polycert
