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

// polycert command line. Exit codes: 0 success, 1 verification failed,
// 2 bad input, 3 factoring or oracle budget exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycert/certify.hpp"
#include "polycert/error.hpp"
#include "polycert/newton.hpp"
#include "polycert/oracle.hpp"
#include "polycert/poly_text.hpp"
#include "polycert/svg.hpp"

namespace {

using nlohmann::json;
using namespace polycert;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct PolyInput {
  std::string poly;
  std::string coeffs;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--poly", poly, "Polynomial such as \"64+56z^2+14z^4+z^6\"");
    auto* c = cmd->add_option("--coeffs", coeffs, "Coefficients a_0,...,a_n");
    p->excludes(c);
    c->excludes(p);
  }

  Polynomial get() const {
    if (!poly.empty()) return parse_poly(poly);
    if (!coeffs.empty()) return parse_coeffs_csv(coeffs);
    throw Error(ErrorCode::InvalidArgument, "one of --poly or --coeffs is required");
  }
};

json coeffs_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

unsigned parse_criteria(const std::string& list) {
  if (list.empty()) return kAllCriteria;
  unsigned mask = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    for (auto& ch : item) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (item == "t1") mask |= kT1;
    else if (item == "t2") mask |= kT2;
    else if (item == "t3") mask |= kT3;
    else if (item == "t4") mask |= kT4;
    else if (item == "l3") mask |= kL3;
    else if (item == "l4") mask |= kL4;
    else if (item == "l5") mask |= kL5;
    else throw Error(ErrorCode::InvalidArgument, "unknown criterion '" + item + "'");
  }
  return mask;
}

std::string delta_text(const DegreeBound& d) {
  if (d.is_trivial()) return "1 (trivial)";
  std::string s = std::to_string(d.bound) + " (p=" + d.prime.get_str() + ", j=" + std::to_string(d.j) +
                  ", d1=" + std::to_string(d.d1);
  if (d.d2) s += ", d2=" + std::to_string(*d.d2);
  return s + ")";
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream out;
  out << to_string(c.theorem);
  if (c.reversed) out << " on reverse";
  if (c.m) out << " m=" << c.m->get_str();
  out << " bound=" << c.bound;
  for (const auto& e : c.primes) {
    out << " [p=" << e.p.get_str() << " k=" << e.k;
    if (e.j) out << " j=" << e.j;
    out << ']';
  }
  if (c.d) out << " d=" << c.d->get_str();
  if (c.q) out << " q=" << c.q->get_str();
  if (c.prime_certainty == PrimeCertainty::Probable) out << " (probable primes)";
  return out.str();
}

int run_analyze(const PolyInput& in, const std::string& m_min, const std::string& m_max, long budget_ms,
                const std::string& criteria, int threads, bool serial, bool as_json) {
  AnalysisConfig cfg;
  if (!m_min.empty()) cfg.m_min = Integer(m_min, 10);
  if (!m_max.empty()) cfg.m_max = Integer(m_max, 10);
  cfg.factor_budget = std::chrono::milliseconds(budget_ms);
  cfg.criteria = parse_criteria(criteria);
  cfg.threads = threads;
  cfg.parallel = !serial;
  const AnalysisReport r = analyze(in.get(), cfg);

  if (as_json) {
    std::cout << report_to_json(r, 2) << '\n';
  } else {
    std::cout << "polynomial:  " << to_string(r.input) << '\n'
              << "content:     " << r.content.get_str() << '\n'
              << "delta:       " << delta_text(r.delta) << '\n';
    if (r.tried_m > 0) {
      std::cout << "witnesses:   m = " << r.m_from.get_str() << ".." << r.m_to.get_str() << " (" << r.tried_m
                << " tried, " << r.inconclusive << " inconclusive)\n";
    }
    std::cout << "verdict:     " << verdict_string(r) << '\n';
    if (r.best) std::cout << "best:        " << certificate_text(*r.best) << '\n';
    std::cout << "certificates: " << r.all_certificates.size() << '\n';
  }
  if (r.verdict == Verdict::Unknown && r.inconclusive > 0) return kExitBudget;
  return kExitOk;
}

int run_newton(const PolyInput& in, const std::string& prime_text, const std::string& svg_path, bool as_json) {
  const Polynomial f = in.get();
  Integer prime;
  if (prime.set_str(prime_text, 10) != 0) throw ParseError(0, "prime must be a decimal integer");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "newton");
  const auto points = valuation_points(f, prime);
  const NewtonPolygon np = lower_hull(points, prime);

  json cands = json::array();
  std::vector<std::string> cand_lines;
  for (std::size_t j = 1; j <= f.degree(); ++j) {
    const auto r = theorem5_bound(f, prime, j);
    if (const auto* b = std::get_if<DegreeBound>(&r)) {
      cands.push_back({{"j", j}, {"bound", b->bound}, {"d1", b->d1}, {"d2", b->d2.value_or(0)}});
      std::ostringstream line;
      line << "  j=" << j << " -> " << b->bound << " (d1=" << b->d1;
      if (b->d2) line << ", d2=" << *b->d2;
      line << ')';
      cand_lines.push_back(line.str());
    }
  }

  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + svg_path);
    out << newton_svg(points, np);
  }

  if (as_json) {
    json j;
    j["prime"] = prime.get_str();
    j["points"] = json::array();
    for (const auto& p : points) j["points"].push_back({p.x, p.y});
    j["vertices"] = json::array();
    for (const auto& v : np.vertices) j["vertices"].push_back({v.x, v.y});
    j["edges"] = json::array();
    for (const auto& e : np.edges()) {
      j["edges"].push_back({{"from", {e.from.x, e.from.y}},
                            {"to", {e.to.x, e.to.y}},
                            {"width", e.width},
                            {"slope", e.slope.get_str()},
                            {"lattice_points", e.lattice_points}});
    }
    j["delta_candidates"] = std::move(cands);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "prime:    " << prime.get_str() << "\nvertices:";
  for (const auto& v : np.vertices) std::cout << " (" << v.x << "," << v.y << ")";
  std::cout << "\nedges:\n";
  for (const auto& e : np.edges()) {
    std::cout << "  (" << e.from.x << "," << e.from.y << ")-(" << e.to.x << "," << e.to.y << ") width " << e.width
              << " slope " << e.slope.get_str() << " lattice points " << e.lattice_points << '\n';
  }
  std::cout << "delta candidates:" << (cand_lines.empty() ? " none" : "") << '\n';
  for (const auto& l : cand_lines) std::cout << l << '\n';
  return kExitOk;
}

int run_verify(const PolyInput& in, const std::string& cert_path) {
  std::string text;
  if (cert_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(cert_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read " + cert_path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const Certificate cert = certificate_from_json(text);
  const VerificationReport r = verify_certificate(in.get(), cert);
  if (r.pass) {
    std::cout << "pass: " << certificate_text(cert) << '\n';
    return kExitOk;
  }
  std::cout << "fail: " << r.failed << '\n';
  return kExitVerifyFailed;
}

int run_oracle(const PolyInput& in, bool as_json) {
  const OracleFactorization of = oracle_factor(in.get());
  if (as_json) {
    json j;
    j["unit"] = of.unit;
    j["content"] = of.content.get_str();
    j["factors"] = json::array();
    for (const auto& f : of.factors) j["factors"].push_back(coeffs_json(f));
    j["count"] = of.factors.size();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "unit:    " << of.unit << "\ncontent: " << of.content.get_str() << "\nfactors: " << of.factors.size()
            << '\n';
  for (const auto& f : of.factors) std::cout << "  " << to_string(f) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds on the number of irreducible factors of integer polynomials"};
  app.require_subcommand(1);

  PolyInput analyze_in, newton_in, verify_in, oracle_in;
  std::string m_min, m_max, criteria, prime, svg_path, cert_path;
  long budget_ms = 2000;
  int threads = 0;
  bool serial = false, analyze_json = false, newton_json = false, oracle_json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Search witnesses and report the best certificate");
  analyze_in.add_to(analyze_cmd);
  analyze_cmd->add_option("--m-min", m_min, "Smallest witness m");
  analyze_cmd->add_option("--m-max", m_max, "Largest witness m (default ceil(h)+1000)");
  analyze_cmd->add_option("--budget-ms", budget_ms, "Factoring budget per integer")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--criteria", criteria, "Comma list of t1,t2,t3,t4,l3,l4,l5");
  analyze_cmd->add_option("--threads", threads, "Scan threads (0 = OpenMP default)");
  analyze_cmd->add_flag("--serial", serial, "Use the serial reference scan");
  analyze_cmd->add_flag("--json", analyze_json, "Emit the JSON report");

  auto* newton_cmd = app.add_subcommand("newton", "Newton polygon and degree-bound candidates for one prime");
  newton_in.add_to(newton_cmd);
  newton_cmd->add_option("--prime", prime, "Prime p")->required();
  newton_cmd->add_option("--svg", svg_path, "Write an SVG drawing to this path");
  newton_cmd->add_flag("--json", newton_json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
  verify_in.add_to(verify_cmd);
  verify_cmd->add_option("--cert", cert_path, "Certificate JSON file, or - for stdin")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force factorization (degree <= 8)");
  oracle_in.add_to(oracle_cmd);
  oracle_cmd->add_flag("--json", oracle_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) {
      return run_analyze(analyze_in, m_min, m_max, budget_ms, criteria, threads, serial, analyze_json);
    }
    if (*newton_cmd) return run_newton(newton_in, prime, svg_path, newton_json);
    if (*verify_cmd) return run_verify(verify_in, cert_path);
    if (*oracle_cmd) return run_oracle(oracle_in, oracle_json);
  } catch (const Error& e) {
    std::cerr << "polycert: " << e.what() << '\n';
    const bool budget = e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::OracleBudgetExceeded;
    return budget ? kExitBudget : kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "polycert: bad integer argument\n";
    return kExitInput;
  }
  return kExitInput;
}
