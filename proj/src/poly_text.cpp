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

#include "polycert/poly_text.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "polycert/error.hpp"

namespace polycert {

namespace {

// Exponents beyond this are rejected rather than allocated.
constexpr std::size_t kMaxExponent = 1u << 16;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!is_space(text[i])) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
  }

  Polynomial parse() {
    if (chars_.empty()) throw ParseError(0, "empty polynomial");
    bool negative = accept('-');
    term(negative);
    while (pos_ < chars_.size()) {
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
      term(negative);
    }
    return Polynomial(std::move(coeffs_));
  }

 private:
  void term(bool negative) {
    Integer c = 1;
    bool has_number = false;
    if (pos_ < chars_.size() && is_digit(chars_[pos_])) {
      c = nat();
      has_number = true;
      if (accept('*')) {
        if (!at_var()) fail("expected 'z' or 'x' after '*'");
      }
    }
    std::size_t power = 0;
    if (at_var()) {
      ++pos_;
      power = 1;
      if (accept('^')) {
        if (pos_ >= chars_.size() || !is_digit(chars_[pos_])) fail("expected exponent after '^'");
        const std::size_t at = pos_;
        const Integer e = nat();
        if (e > kMaxExponent) fail_at(at, "exponent too large");
        power = e.get_ui();
      }
    } else if (!has_number) {
      fail("expected a number or 'z'");
    }
    if (coeffs_.size() <= power) coeffs_.resize(power + 1, 0);
    coeffs_[power] += negative ? Integer(-c) : c;
  }

  Integer nat() {
    std::string digits;
    while (pos_ < chars_.size() && is_digit(chars_[pos_])) digits.push_back(chars_[pos_++]);
    return Integer(digits, 10);
  }

  bool at_var() const { return pos_ < chars_.size() && (chars_[pos_] == 'z' || chars_[pos_] == 'x'); }

  bool accept(char c) {
    if (pos_ < chars_.size() && chars_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t index, const std::string& what) const {
    const std::size_t offset = index < offsets_.size() ? offsets_[index] : text_.size();
    throw ParseError(offset, what);
  }

  std::string_view text_;
  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
  std::vector<Integer> coeffs_;
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_coeffs_csv(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t b = start, e = end;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    std::string field(text.substr(b, e - b));
    std::size_t digits_from = (!field.empty() && (field[0] == '-' || field[0] == '+')) ? 1 : 0;
    if (field.size() == digits_from) throw ParseError(b, "expected an integer");
    for (std::size_t i = digits_from; i < field.size(); ++i) {
      if (!is_digit(field[i])) throw ParseError(b + i, "expected a digit");
    }
    if (field[0] == '+') field.erase(0, 1);
    coeffs.emplace_back(field, 10);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace polycert
