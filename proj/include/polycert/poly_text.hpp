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

#include <string_view>

#include "polycert/polynomial.hpp"

namespace polycert {

/// Parses sums of terms such as "-3+3z+343z^2" or "2*x^4 - x". Whitespace is
/// ignored, `z` and `x` both name the variable, and repeated powers add up.
///
///   poly := ['-'] term (('+'|'-') term)*
///   term := nat | nat ['*'] var | var
///   var  := ('z'|'x') ['^' nat]
///
/// Throws ParseError carrying the byte offset of the problem.
Polynomial parse_poly(std::string_view text);

/// Comma-separated a_0,...,a_n. Throws ParseError.
Polynomial parse_coeffs_csv(std::string_view text);

}  // namespace polycert
