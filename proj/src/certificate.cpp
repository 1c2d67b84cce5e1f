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

#include "polycert/certificate.hpp"

#include <array>
#include <utility>

#include <json.hpp>

#include "polycert/error.hpp"

namespace polycert {

namespace {

using nlohmann::json;

constexpr std::string_view kSchema = "polycert-1";

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kTags = {{
    {Theorem::T1, "T1"},
    {Theorem::T2, "T2"},
    {Theorem::T3, "T3"},
    {Theorem::T4, "T4"},
    {Theorem::L3, "L3"},
    {Theorem::L4, "L4"},
    {Theorem::L5, "L5"},
    {Theorem::NP, "NP"},
}};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

Integer parse_integer(const json& j, const char* field) {
  if (!j.is_string()) malformed(std::string(field) + " must be a decimal string");
  Integer v;
  const auto s = j.get<std::string>();
  if (s.empty() || v.set_str(s, 10) != 0) malformed(std::string(field) + ": bad integer '" + s + "'");
  return v;
}

std::optional<Integer> parse_optional_integer(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return parse_integer(*it, field);
}

std::uint64_t parse_count(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || !it->is_number_integer()) malformed(std::string(field) + " must be an integer");
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  const auto v = it->get<std::int64_t>();
  if (v < 0) malformed(std::string(field) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

const json& require(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) malformed(std::string("missing field ") + field);
  return *it;
}

json optional_string(const std::optional<Integer>& v) { return v ? json(v->get_str()) : json(nullptr); }

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  for (const auto& [k, v] : kTags) {
    if (k == t) return v;
  }
  return "?";
}

Theorem theorem_from_string(std::string_view tag) {
  for (const auto& [k, v] : kTags) {
    if (v == tag) return k;
  }
  malformed("unknown theorem tag '" + std::string(tag) + "'");
}

bool better_than(const Certificate& a, const Certificate& b) {
  if (a.bound != b.bound) return a.bound < b.bound;
  if (a.theorem != b.theorem) return static_cast<int>(a.theorem) < static_cast<int>(b.theorem);
  if (a.m && b.m && *a.m != *b.m) return *a.m < *b.m;
  return !a.reversed && b.reversed;
}

std::string certificate_to_json(const Certificate& c, int indent) {
  json j;
  j["schema"] = kSchema;
  j["theorem"] = to_string(c.theorem);
  json poly = json::array();
  for (const auto& a : c.poly.coeffs()) poly.push_back(a.get_str());
  j["poly"] = std::move(poly);
  j["content"] = c.content.get_str();
  j["m"] = optional_string(c.m);
  j["reversed"] = c.reversed;
  j["sign"] = c.sign;
  json primes = json::array();
  for (const auto& e : c.primes) primes.push_back({{"p", e.p.get_str()}, {"k", e.k}, {"j", e.j}});
  j["primes"] = std::move(primes);
  j["d"] = optional_string(c.d);
  j["q"] = optional_string(c.q);
  if (c.delta) {
    j["delta"] = {{"bound", c.delta->bound},
                  {"p", c.delta->prime.get_str()},
                  {"j", c.delta->j},
                  {"d1", c.delta->d1},
                  {"d2", c.delta->d2.value_or(0)}};
  } else {
    j["delta"] = nullptr;
  }
  j["bound"] = c.bound;
  j["prime_certainty"] = c.prime_certainty == PrimeCertainty::Deterministic ? "deterministic" : "probable";
  return j.dump(indent);
}

Certificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("certificate must be an object");
  if (require(j, "schema") != kSchema) malformed("schema must be polycert-1");

  Certificate c;
  const json& tag = require(j, "theorem");
  if (!tag.is_string()) malformed("theorem must be a string");
  c.theorem = theorem_from_string(tag.get<std::string>());

  const json& poly = require(j, "poly");
  if (!poly.is_array() || poly.empty()) malformed("poly must be a nonempty array");
  std::vector<Integer> coeffs;
  for (const auto& a : poly) coeffs.push_back(parse_integer(a, "poly"));
  if (sgn(coeffs.back()) == 0) malformed("poly has a zero leading coefficient");
  c.poly = Polynomial(std::move(coeffs));

  c.content = parse_integer(require(j, "content"), "content");
  if (sgn(c.content) <= 0) malformed("content must be positive");
  c.m = parse_optional_integer(j, "m");

  const json& reversed = require(j, "reversed");
  if (!reversed.is_boolean()) malformed("reversed must be a boolean");
  c.reversed = reversed.get<bool>();

  const json& sign = require(j, "sign");
  if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) malformed("sign must be 1 or -1");
  c.sign = sign.get<int>();

  const json& primes = require(j, "primes");
  if (!primes.is_array()) malformed("primes must be an array");
  for (const auto& e : primes) {
    if (!e.is_object()) malformed("prime entry must be an object");
    c.primes.push_back({parse_integer(require(e, "p"), "p"), parse_count(e, "k"),
                        static_cast<std::size_t>(parse_count(e, "j"))});
  }

  c.d = parse_optional_integer(j, "d");
  c.q = parse_optional_integer(j, "q");

  if (const auto it = j.find("delta"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) malformed("delta must be an object or null");
    DegreeBound b;
    b.source = DegreeBound::Source::Theorem5;
    b.bound = parse_count(*it, "bound");
    b.prime = parse_integer(require(*it, "p"), "delta.p");
    b.j = static_cast<std::size_t>(parse_count(*it, "j"));
    b.d1 = parse_count(*it, "d1");
    if (const auto d2 = parse_count(*it, "d2"); d2 != 0) b.d2 = d2;
    c.delta = b;
  }

  c.bound = parse_count(j, "bound");
  if (c.bound < 1) malformed("bound must be at least 1");

  const json& certainty = require(j, "prime_certainty");
  if (certainty == "deterministic") {
    c.prime_certainty = PrimeCertainty::Deterministic;
  } else if (certainty == "probable") {
    c.prime_certainty = PrimeCertainty::Probable;
  } else {
    malformed("prime_certainty must be deterministic or probable");
  }
  return c;
}

}  // namespace polycert
