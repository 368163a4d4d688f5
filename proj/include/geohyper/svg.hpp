#pragma once

// Presentation-only SVG output. The viewBox is the input bounding box plus a
// 5% margin on each side; y is flipped so "up" matches the math convention.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "geohyper/arrangement.hpp"
#include "geohyper/exact_geom.hpp"

namespace geohyper::svg {

struct Box {
  double xmin, xmax, ymin, ymax;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline Box with_margin(Box b) {
  double w = std::max(b.xmax - b.xmin, 1e-9), h = std::max(b.ymax - b.ymin, 1e-9);
  return {b.xmin - 0.05 * w, b.xmax + 0.05 * w, b.ymin - 0.05 * h, b.ymax + 0.05 * h};
}

inline std::string header(const Box& b) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.xmin) << ' ' << num(-b.ymax) << ' '
     << num(b.xmax - b.xmin) << ' ' << num(b.ymax - b.ymin) << "\">\n";
  return os.str();
}

/// Segments drawn thin, the top level of their supporting lines drawn thick
/// and clipped to the segments' x-range.
inline std::string arrangement(std::span<const Segment2> segments, const TopLevel& top) {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const auto& s : segments)
    for (const Point2* p : {&s.a, &s.b}) {
      b.xmin = std::min(b.xmin, p->x.to_double());
      b.xmax = std::max(b.xmax, p->x.to_double());
      b.ymin = std::min(b.ymin, p->y.to_double());
      b.ymax = std::max(b.ymax, p->y.to_double());
    }
  Box vb = with_margin(b);
  double stroke = (vb.xmax - vb.xmin) / 400.0;
  std::ostringstream os;
  os << header(vb);
  for (const auto& s : segments)
    os << "  <line x1=\"" << num(s.a.x.to_double()) << "\" y1=\"" << num(-s.a.y.to_double()) << "\" x2=\""
       << num(s.b.x.to_double()) << "\" y2=\"" << num(-s.b.y.to_double()) << "\" stroke=\"black\" stroke-width=\""
       << num(stroke) << "\"/>\n";
  // Envelope polyline over [xmin, xmax].
  std::vector<std::pair<double, double>> poly;
  Rational xl = Rational::parse(std::to_string(static_cast<long long>(std::floor(b.xmin))));
  Rational xr = Rational::parse(std::to_string(static_cast<long long>(std::ceil(b.xmax))));
  poly.emplace_back(xl.to_double(), top.y_at(xl).to_double());
  for (const auto& bp : top.breakpoints)
    if (bp.x > xl && bp.x < xr) poly.emplace_back(bp.x.to_double(), bp.y.to_double());
  poly.emplace_back(xr.to_double(), top.y_at(xr).to_double());
  os << "  <polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"" << num(4 * stroke) << "\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i)
    os << (i ? " " : "") << num(poly[i].first) << ',' << num(-poly[i].second);
  os << "\"/>\n</svg>\n";
  return os.str();
}

/// Line chart of named series over a shared integer x-axis.
inline std::string series_plot(const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series) {
  Box b{1e300, -1e300, 0, -1e300};
  for (const auto& [name, pts] : series)
    for (auto [x, y] : pts) {
      b.xmin = std::min(b.xmin, x);
      b.xmax = std::max(b.xmax, x);
      b.ymax = std::max(b.ymax, y);
    }
  if (b.xmin > b.xmax) b = {0, 1, 0, 1};
  // Scale x so the plot is roughly square.
  double sx = std::max(b.ymax - b.ymin, 1.0) / std::max(b.xmax - b.xmin, 1.0);
  Box scaled{b.xmin * sx, b.xmax * sx, b.ymin, b.ymax};
  Box vb = with_margin(scaled);
  double stroke = (vb.ymax - vb.ymin) / 300.0;
  static const char* colors[] = {"black", "crimson", "steelblue", "darkgreen"};
  std::ostringstream os;
  os << header(vb);
  std::size_t c = 0;
  for (const auto& [name, pts] : series) {
    os << "  <polyline fill=\"none\" stroke=\"" << colors[c++ % 4] << "\" stroke-width=\"" << num(stroke)
       << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      os << (i ? " " : "") << num(pts[i].first * sx) << ',' << num(-pts[i].second);
    os << "\"><title>" << name << "</title></polyline>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace geohyper::svg
