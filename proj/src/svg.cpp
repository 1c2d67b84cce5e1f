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

#include "polycert/svg.hpp"

#include <algorithm>
#include <sstream>

namespace polycert {

namespace {

constexpr double kMargin = 30;
constexpr double kPlot = 400;
constexpr std::int64_t kGridLimit = 50;

}  // namespace

std::string newton_svg(const std::vector<ValuationPoint>& points, const NewtonPolygon& polygon) {
  std::int64_t max_x = 1, max_y = 1;
  for (const auto& p : points) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double unit = kPlot / static_cast<double>(std::max(max_x, max_y));
  const double width = unit * static_cast<double>(max_x) + 2 * kMargin;
  const double height = unit * static_cast<double>(max_y) + 2 * kMargin;
  auto sx = [&](std::int64_t x) { return kMargin + unit * static_cast<double>(x); };
  // y flipped: valuation 0 sits at the bottom.
  auto sy = [&](std::int64_t y) { return height - kMargin - unit * static_cast<double>(y); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<title>Newton polygon, p = " << polygon.prime.get_str() << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (max_x <= kGridLimit && max_y <= kGridLimit) {
    out << "<g class=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (std::int64_t x = 0; x <= max_x; ++x) {
      out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(max_y)
          << "\"/>\n";
    }
    for (std::int64_t y = 0; y <= max_y; ++y) {
      out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(max_x) << "\" y2=\"" << sy(y)
          << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1.5\">\n"
      << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x) << "\" y2=\"" << sy(0) << "\"/>\n"
      << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(max_y) << "\"/>\n"
      << "</g>\n";

  out << "<polyline class=\"hull\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
    out << (i ? " " : "") << sx(polygon.vertices[i].x) << ',' << sy(polygon.vertices[i].y);
  }
  out << "\"/>\n";

  for (const auto& p : points) {
    out << "<circle class=\"point\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"#808080\"/>\n";
  }
  for (const auto& p : polygon.lattice_points()) {
    out << "<circle class=\"lattice\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
        << "\" r=\"4\" fill=\"none\" stroke=\"#1f5fbf\"/>\n";
  }
  for (const auto& v : polygon.vertices) {
    out << "<circle class=\"vertex\" cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"5\" fill=\"#1f5fbf\">"
        << "<title>(" << v.x << ", " << v.y << ")</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polycert
