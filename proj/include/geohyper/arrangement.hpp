#pragma once

// Upper envelope ("top level") of the supporting lines of a pairwise
// crossing segment family, and its intersections with triangles.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"

namespace geohyper {

/// Closed x-interval; nullopt bounds are -inf / +inf.
struct XInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
  friend bool operator==(const XInterval&, const XInterval&) = default;
};

/// True iff two closed intervals share a point.
inline bool intervals_meet(const XInterval& a, const XInterval& b) {
  if (a.lo && b.hi && *a.lo > *b.hi) return false;
  if (b.lo && a.hi && *b.lo > *a.hi) return false;
  return true;
}

/// Convex piecewise-linear upper envelope. Piece i lies on lines[pieces[i]]
/// and spans [breakpoints[i-1], breakpoints[i]] in x (unbounded at the ends).
struct TopLevel {
  std::vector<Line2> lines;
  std::vector<std::size_t> pieces;
  std::vector<Point2> breakpoints;

  std::size_t num_pieces() const { return pieces.size(); }
  const Line2& piece_line(std::size_t i) const { return lines[pieces[i]]; }

  XInterval piece_range(std::size_t i) const {
    XInterval r;
    if (i > 0) r.lo = breakpoints[i - 1].x;
    if (i + 1 < pieces.size()) r.hi = breakpoints[i].x;
    return r;
  }

  Rational y_at(const Rational& x) const {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (piece_range(i).contains(x)) return piece_line(i).y_at(x);
    throw Error(Errc::PointNotOnArrangement, "x outside the envelope");  // unreachable
  }

  Point2 lift(const Rational& x) const { return {x, y_at(x)}; }

  /// Distinct supporting-line indices visited left to right.
  std::vector<std::size_t> visited_lines() const { return pieces; }
};

/// Number of lines strictly below p at p.x; p must lie on some line.
inline int level_of(std::span<const Line2> lines, const Point2& p) {
  bool on_some = false;
  int below = 0;
  for (const auto& l : lines) {
    if (l.is_vertical()) throw Error(Errc::VerticalLine, "vertical line in arrangement");
    Rational y = l.y_at(p.x);
    if (y == p.y) on_some = true;
    else if (y < p.y) ++below;
  }
  if (!on_some) throw Error(Errc::PointNotOnArrangement, "point lies on no line");
  return below;
}

/// Upper envelope of non-vertical, pairwise non-parallel lines.
inline TopLevel upper_envelope(std::vector<Line2> lines) {
  for (const auto& l : lines)
    if (l.is_vertical()) throw Error(Errc::VerticalLine, "vertical supporting line");
  std::vector<Rational> slope(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) slope[i] = lines[i].slope();
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return slope[a] < slope[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (slope[order[i]] == slope[order[i - 1]]) throw Error(Errc::ParallelLines, "parallel supporting lines");

  // Slopes increase, so a line is dominated once the newest line overtakes
  // its predecessor no later than the previous breakpoint.
  std::vector<std::size_t> stack;
  for (std::size_t idx : order) {
    while (stack.size() >= 2) {
      const Line2& a = lines[stack[stack.size() - 2]];
      const Line2& b = lines[stack.back()];
      Rational x_ab = line_intersection(a, b).x;
      Rational x_an = line_intersection(a, lines[idx]).x;
      if (x_an <= x_ab) stack.pop_back();
      else break;
    }
    stack.push_back(idx);
  }

  TopLevel top;
  top.lines = std::move(lines);
  top.pieces = std::move(stack);
  for (std::size_t i = 0; i + 1 < top.pieces.size(); ++i)
    top.breakpoints.push_back(line_intersection(top.lines[top.pieces[i]], top.lines[top.pieces[i + 1]]));
  return top;
}

/// Top level of a pairwise crossing segment family: the upper envelope of
/// the supporting lines, never truncated to the segments.
inline TopLevel top_level(std::span<const Segment2> segments) {
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      bool crosses = false;
      try {
        crosses = segments_cross(segments[i], segments[j]);
      } catch (const Error& e) {
        if (e.code() != Errc::SharedEndpoint) throw;
      }
      if (!crosses) throw Error(Errc::NotPairwiseCrossing, "segments " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " do not cross");
    }
  std::vector<Line2> lines;
  lines.reserve(segments.size());
  for (const auto& s : segments) lines.push_back(Line2::supporting(s));
  return upper_envelope(std::move(lines));
}

namespace detail {

// x-range where the non-vertical line lies in the closed triangle.
inline std::optional<XInterval> line_in_triangle(const Line2& line, const Triangle2& tri) {
  Triangle2 t = ccw(tri);
  Rational m = line.slope(), c = line.intercept();
  XInterval r;
  for (int e = 0; e < 3; ++e) {
    const Point2& a = t[e];
    const Point2& b = t[(e + 1) % 3];
    // cross2(a, b, (x, m x + c)) = alpha x + beta >= 0
    Rational dx = b.x - a.x, dy = b.y - a.y;
    Rational alpha = dx * m - dy;
    Rational beta = dx * (c - a.y) + dy * a.x;
    if (alpha.sign() == 0) {
      if (beta.sign() < 0) return std::nullopt;
      continue;
    }
    Rational root = -beta / alpha;
    if (alpha.sign() > 0) {
      if (!r.lo || root > *r.lo) r.lo = root;
    } else {
      if (!r.hi || root < *r.hi) r.hi = root;
    }
  }
  if (r.lo && r.hi && *r.lo > *r.hi) return std::nullopt;
  return r;
}

inline std::optional<XInterval> intersect(const XInterval& a, const XInterval& b) {
  XInterval r;
  r.lo = !a.lo ? b.lo : (!b.lo ? a.lo : std::max(*a.lo, *b.lo));
  r.hi = !a.hi ? b.hi : (!b.hi ? a.hi : std::min(*a.hi, *b.hi));
  if (r.lo && r.hi && *r.lo > *r.hi) return std::nullopt;
  return r;
}

}  // namespace detail

/// x-projection of L ∩ t as sorted, maximal, pairwise disjoint closed
/// intervals.
inline std::vector<XInterval> triangle_on_top_level(const TopLevel& top, const Triangle2& t) {
  detail::require_nondegenerate(t);
  std::vector<XInterval> parts;
  for (std::size_t i = 0; i < top.num_pieces(); ++i) {
    auto on_line = detail::line_in_triangle(top.piece_line(i), t);
    if (!on_line) continue;
    if (auto piece = detail::intersect(*on_line, top.piece_range(i))) parts.push_back(*piece);
  }
  // Pieces are already left to right; merge those meeting at a breakpoint.
  std::vector<XInterval> merged;
  for (auto& p : parts) {
    if (!merged.empty() && merged.back().hi && p.lo && *merged.back().hi >= *p.lo) {
      merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

/// Common point of closed intervals (the largest left end), if any.
inline std::optional<Rational> helly_1d(std::span<const XInterval> intervals) {
  std::optional<Rational> max_lo, min_hi;
  bool any_lo = false, any_hi = false;
  for (const auto& iv : intervals) {
    if (iv.lo) {
      max_lo = any_lo ? std::max(*max_lo, *iv.lo) : *iv.lo;
      any_lo = true;
    }
    if (iv.hi) {
      min_hi = any_hi ? std::min(*min_hi, *iv.hi) : *iv.hi;
      any_hi = true;
    }
  }
  if (any_lo && any_hi && *max_lo > *min_hi) return std::nullopt;
  if (any_lo) return max_lo;
  if (any_hi) return min_hi;
  return Rational(0);
}

/// Rightmost point where the closed segment ab meets L, if any.
inline std::optional<Point2> segment_top_level_crossing(const TopLevel& top, const Point2& a, const Point2& b) {
  std::optional<Point2> best;
  auto consider = [&](const Point2& p) {
    if (!best || p.x > best->x) best = p;
  };
  for (std::size_t i = 0; i < top.num_pieces(); ++i) {
    const Line2& l = top.piece_line(i);
    XInterval range = top.piece_range(i);
    Rational fa = l.eval(a), fb = l.eval(b);
    if (fa.sign() == 0 && fb.sign() == 0) {
      for (const Point2* p : {&a, &b})
        if (range.contains(p->x)) consider(*p);
      continue;
    }
    if (fa.sign() * fb.sign() > 0) continue;
    Rational t = fa / (fa - fb);
    Point2 p = detail::lerp(a, b, t);
    if (range.contains(p.x)) consider(p);
  }
  return best;
}

}  // namespace geohyper
