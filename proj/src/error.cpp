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

#include "polycert/error.hpp"

namespace polycert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroEndCoefficient: return "ZeroEndCoefficient";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NoPrimeDivisor: return "NoPrimeDivisor";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::WitnessIsRoot: return "WitnessIsRoot";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::OracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorCode::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polycert
