#pragma once

// Deterministic SVG picture of a plane lattice: grid, lattice points, the
// set V coloured by region, the pairs of X1, and the quotient graph.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latbb/region_graph.hpp"

namespace latbb {

namespace detail {

inline std::string region_name(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i = i / 26;
  } while (i-- > 0);
  return s;
}

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace detail

/// SVG for a plane lattice; the search result supplies V, regions and graph.
/// With no regions only the grid is drawn.
inline std::string plot_svg(const IdealSearch& s) {
  if (s.lattice.dim() != 2) throw std::invalid_argument("plot: only n = 2 is supported");
  static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                  "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  const auto& regions = s.graph.regions;
  // Window: a little beyond A1 and the bounded part of V.
  Int extent = 8;
  for (const auto& a : s.a1) extent = std::max({extent, a[0] + 2, a[1] + 2});
  for (const auto& r : s.v.rects())
    for (std::size_t i = 0; i < 2; ++i)
      if (r.hi[i] != kInf) extent = std::max(extent, r.hi[i] + 1);
  extent = std::min<Int>(extent, 60);
  const int cell = 16, margin = 30;
  const int plot = static_cast<int>(extent) * cell;
  const int panel = 260;
  const int width = margin * 2 + plot + panel, height = margin * 2 + plot;
  auto px = [&](double x) { return detail::fixed(margin + x * cell); };
  auto py = [&](double y) { return detail::fixed(margin + plot - y * cell); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<g class=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
  for (Int i = 0; i <= extent; ++i) {
    o << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(extent) << "\"/>\n";
    o << "<line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(extent) << "\" y2=\"" << py(i) << "\"/>\n";
  }
  o << "</g>\n";
  if (regions.empty()) {
    o << "</svg>\n";
    return o.str();
  }

  // Cells of V, coloured by region.
  o << "<g class=\"regions\" stroke=\"none\">\n";
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const HyperRect window{{0, 0}, {extent, extent}};
    const RectUnion clipped = regions[r].points & RectUnion::single(window);
    for (const auto& box : clipped.rects())
      o << "<rect class=\"region\" x=\"" << px(box.lo[0] - 0.5) << "\" y=\"" << py(box.hi[1] - 0.5) << "\" width=\""
        << (box.hi[0] - box.lo[0]) * cell << "\" height=\"" << (box.hi[1] - box.lo[1]) * cell << "\" fill=\""
        << palette[r % 12] << "\" fill-opacity=\"0.7\"/>\n";
  }
  o << "</g>\n";

  // Lattice points in the window.
  o << "<g class=\"lattice\" fill=\"black\">\n";
  for (Int x = 0; x <= extent; ++x)
    for (Int y = 0; y <= extent; ++y)
      if (s.lattice.contains({x, y})) o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
  o << "</g>\n";

  // X1 pairs as segments from a0 to a1.
  o << "<g class=\"x1\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"4 2\">\n";
  for (const auto& a : s.x1)
    if (a.a0 < a.a1)
      o << "<line class=\"pair\" x1=\"" << px(a.a0[0]) << "\" y1=\"" << py(a.a0[1]) << "\" x2=\"" << px(a.a1[0])
        << "\" y2=\"" << py(a.a1[1]) << "\"/>\n";
  o << "</g>\n";

  // Region labels at their representatives.
  o << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const auto& rep = regions[r].representative;
    o << "<text class=\"region-label\" x=\"" << px(rep[0] + 0.1) << "\" y=\"" << py(rep[1] + 0.1) << "\">"
      << detail::region_name(r) << "</text>\n";
  }
  o << "</g>\n";

  // Quotient graph on a circle; missing edges dashed in red.
  const double cx = margin + plot + panel / 2.0, cy = margin + plot / 2.0;
  const double radius = panel / 2.0 - 30;
  const double pi = std::acos(-1.0);
  std::vector<std::pair<double, double>> pos;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const double t = 2 * pi * static_cast<double>(r) / static_cast<double>(regions.size()) - pi / 2;
    pos.emplace_back(cx + radius * std::cos(t), cy + radius * std::sin(t));
  }
  o << "<g class=\"graph\">\n";
  for (std::size_t u = 0; u < regions.size(); ++u)
    for (std::size_t v = u + 1; v < regions.size(); ++v) {
      const bool edge = s.graph.adjacency[u][v];
      o << "<line class=\"" << (edge ? "edge" : "missing-edge") << "\" x1=\"" << detail::fixed(pos[u].first)
        << "\" y1=\"" << detail::fixed(pos[u].second) << "\" x2=\"" << detail::fixed(pos[v].first) << "\" y2=\""
        << detail::fixed(pos[v].second) << "\" stroke=\"" << (edge ? "#999999" : "#d62728") << "\""
        << (edge ? "" : " stroke-dasharray=\"3 3\"") << "/>\n";
    }
  for (std::size_t r = 0; r < regions.size(); ++r)
    o << "<circle class=\"node\" cx=\"" << detail::fixed(pos[r].first) << "\" cy=\"" << detail::fixed(pos[r].second)
      << "\" r=\"11\" fill=\"" << palette[r % 12] << "\" stroke=\"black\"/>\n"
      << "<text class=\"node-label\" x=\"" << detail::fixed(pos[r].first) << "\" y=\""
      << detail::fixed(pos[r].second + 4) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << detail::region_name(r) << "</text>\n";
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace latbb
