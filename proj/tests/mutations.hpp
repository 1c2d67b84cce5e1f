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

#include <string>
#include <utility>
#include <vector>

#include "polycert/certify.hpp"
#include "polycert/error.hpp"

namespace polycert::mutations {

struct Mutant {
  std::string what;
  Certificate cert;
};

/// Every applicable single-field mutation of c.
inline std::vector<Mutant> single_field(const Certificate& c) {
  std::vector<Mutant> out;
  auto add = [&](std::string what, auto&& edit) {
    Certificate m = c;
    edit(m);
    out.push_back({std::move(what), std::move(m)});
  };
  if (c.m) {
    add("m+1", [](Certificate& m) { *m.m += 1; });
    add("m-1", [](Certificate& m) { *m.m -= 1; });
  }
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    const std::string at = "[" + std::to_string(i) + "]";
    add("j+1" + at, [i](Certificate& m) { m.primes[i].j += 1; });
    if (c.primes[i].j > 0) add("j-1" + at, [i](Certificate& m) { m.primes[i].j -= 1; });
    add("k+1" + at, [i](Certificate& m) { m.primes[i].k += 1; });
    add("k-1" + at, [i](Certificate& m) { m.primes[i].k -= 1; });
  }
  if (c.primes.size() >= 2) add("swap primes", [](Certificate& m) { std::swap(m.primes[0], m.primes[1]); });
  add("bound-1", [](Certificate& m) { m.bound -= 1; });
  add("sign", [](Certificate& m) { m.sign = -m.sign; });
  add("content+1", [](Certificate& m) { m.content += 1; });
  if (c.d) add("d+1", [](Certificate& m) { *m.d += 1; });
  if (c.q) {
    add("q next prime", [](Certificate& m) {
      Integer next;
      mpz_nextprime(next.get_mpz_t(), m.q->get_mpz_t());
      m.q = next;
    });
  }
  if (c.delta) add("delta+1", [](Certificate& m) { m.delta->bound += 1; });
  return out;
}

/// True when the verifier refuses the certificate, either by failing a
/// condition or by flagging it as malformed.
inline bool rejected(const Polynomial& f, const Certificate& c) {
  try {
    return !verify_certificate(f, c).pass;
  } catch (const Error& e) {
    return e.code() == ErrorCode::Malformed;
  }
}

}  // namespace polycert::mutations
