// Copyright 2026 The cdes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdes/render.hpp"

#include <algorithm>
#include <sstream>

namespace cdes {

namespace {

constexpr int kSlot = 40;
constexpr int kMargin = 30;
constexpr int kRowGap = 80;

std::string edge_text(const Edge& e) {
  return "{(" + std::to_string(e.first.index) + "," + std::to_string(e.first.row) + "),(" +
         std::to_string(e.second.index) + "," + std::to_string(e.second.row) + ")}";
}

std::string join_support(const std::vector<int>& support) {
  std::string out;
  for (int v : support) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Diagram render_svg(const PerfectMatching& m) {
  const bool warning = !is_callan(m);
  const int max_index = m.support().empty() ? 0 : m.support().back();
  const int radius_cap = std::max(0, (max_index - 1) * kSlot / 2);
  const int top_y = kMargin + radius_cap;
  const int bottom_y = top_y + kRowGap;
  const int width = 2 * kMargin + std::max(0, max_index - 1) * kSlot;
  const int height = bottom_y + radius_cap + kMargin;
  auto x_of = [](int index) { return kMargin + (index - 1) * kSlot; };
  auto y_of = [&](int row) { return row == 1 ? top_y : bottom_y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-callan=\""
      << (warning ? "false" : "true") << "\"";
  if (warning) svg << " data-warning=\"uplines\"";
  svg << ">\n";
  if (warning) svg << "  <!-- warning: matching has uplines and is not Callan -->\n";
  svg << "  <g class=\"edges\" fill=\"none\" stroke=\"black\">\n";
  for (const PerfectMatching& comp : components(m)) {
    svg << "    <g class=\"component\" data-support=\"" << join_support(comp.support())
        << "\">\n";
    for (const Edge& e : comp.edges()) {
      const EdgeClass c = edge_class(e);
      const int x1 = x_of(e.first.index);
      const int y1 = y_of(e.first.row);
      const int x2 = x_of(e.second.index);
      const int y2 = y_of(e.second.row);
      svg << "      ";
      if (c == EdgeClass::arc) {
        const int r = (x2 - x1) / 2;
        const int sweep = e.first.row == 1 ? 1 : 0;
        svg << "<path class=\"edge arc\" d=\"M " << x1 << ' ' << y1 << " A " << r << ' ' << r
            << " 0 0 " << sweep << ' ' << x2 << ' ' << y2 << "\"/>\n";
      } else {
        svg << "<line class=\"edge " << to_string(c) << "\" x1=\"" << x1 << "\" y1=\"" << y1
            << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"";
        if (c == EdgeClass::upline) svg << " stroke=\"red\"";
        svg << "/>\n";
      }
    }
    svg << "    </g>\n";
  }
  svg << "  </g>\n  <g class=\"vertices\">\n";
  for (int index : m.support()) {
    for (int row : {1, 0}) {
      svg << "    <circle cx=\"" << x_of(index) << "\" cy=\"" << y_of(row)
          << "\" r=\"4\" data-vertex=\"" << index << ',' << row << "\"/>\n";
    }
  }
  svg << "  </g>\n  <g class=\"labels\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int index : m.support()) {
    svg << "    <text x=\"" << x_of(index) << "\" y=\"" << (bottom_y + 20) << "\">" << index
        << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return {svg.str(), warning};
}

Diagram render_text(const PerfectMatching& m) {
  const bool warning = !is_callan(m);
  std::ostringstream out;
  std::ostringstream idx;
  std::ostringstream dots;
  for (int index : m.support()) {
    const std::string label = std::to_string(index);
    idx << ' ' << label;
    dots << ' ' << std::string(label.size() - 1, ' ') << 'o';
  }
  out << "index" << idx.str() << '\n';
  out << "row 1" << dots.str() << '\n';
  out << "row 0" << dots.str() << '\n';
  for (EdgeClass c : {EdgeClass::arc, EdgeClass::downline, EdgeClass::vertical,
                      EdgeClass::upline}) {
    std::string line;
    for (const Edge& e : m.edges()) {
      if (edge_class(e) == c) line += ' ' + edge_text(e);
    }
    if (c == EdgeClass::upline && line.empty()) continue;
    out << to_string(c) << ':' << line << '\n';
  }
  const MatchStats s = match_stats(m);
  out << "stats: arc=" << s.arc << " up=" << s.up << " down=" << s.down << " ver=" << s.ver
      << " com=" << s.com << '\n';
  if (warning) out << "warning: matching has uplines and is not Callan\n";
  return {out.str(), warning};
}

}  // namespace cdes
