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
#include <vector>

#include "polycert/newton.hpp"

namespace polycert {

/// Standalone SVG of the valuation points and their lower hull, valuation
/// growing upward. Hull vertices are the only elements with class "vertex";
/// a unit grid is drawn when every coordinate is at most 50.
std::string newton_svg(const std::vector<ValuationPoint>& points, const NewtonPolygon& polygon);

}  // namespace polycert
