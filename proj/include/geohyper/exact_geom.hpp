#pragma once

// Exact primitive predicates over rational coordinates. Every predicate
// treats simplices as closed sets: boundary contact counts as intersection.

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "geohyper/error.hpp"
#include "geohyper/rational.hpp"

namespace geohyper {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3&, const Point3&) = default;
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
  friend std::ostream& operator<<(std::ostream& os, const Point3& p) {
    return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
  }
};

using Triangle2 = std::array<Point2, 3>;
using Triangle3 = std::array<Point3, 3>;
/// Convex polygon, counter-clockwise. One or two vertices denote a
/// degenerate (point or segment) intersection result.
using Polygon2 = std::vector<Point2>;

struct Vec3 {
  Rational x, y, z;

  friend bool operator==(const Vec3&, const Vec3&) = default;
  bool is_zero() const { return x.sign() == 0 && y.sign() == 0 && z.sign() == 0; }
};

inline Vec3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class Orientation3 { Negative = -1, Coplanar = 0, Positive = 1 };
enum class PlaneSide { Below = -1, On = 0, Above = 1 };

struct Segment2 {
  Point2 a;
  Point2 b;

  Segment2(Point2 a_, Point2 b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b) throw Error(Errc::DegenerateTriangle, "segment endpoints coincide");
  }
  const Point2& left() const { return a.x <= b.x ? a : b; }
  const Point2& right() const { return a.x <= b.x ? b : a; }
};

/// Line {Ax + By + C = 0}, scaled so the leading nonzero coefficient is 1.
class Line2 {
 public:
  Line2(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.sign() == 0 && b_.sign() == 0) throw Error(Errc::DegenerateTriangle, "line with A = B = 0");
    Rational lead = a_.sign() != 0 ? a_ : b_;
    a_ /= lead;
    b_ /= lead;
    c_ /= lead;
  }

  static Line2 through(const Point2& p, const Point2& q) {
    if (p == q) throw Error(Errc::DegenerateTriangle, "line through coincident points");
    Rational a = p.y - q.y;
    Rational b = q.x - p.x;
    Rational c = -(a * p.x + b * p.y);
    return Line2(a, b, c);
  }
  static Line2 supporting(const Segment2& s) { return through(s.a, s.b); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool is_vertical() const { return b_.sign() == 0; }
  Rational slope() const {
    if (is_vertical()) throw Error(Errc::VerticalLine, "slope of a vertical line");
    return -a_ / b_;
  }
  Rational intercept() const {
    if (is_vertical()) throw Error(Errc::VerticalLine, "intercept of a vertical line");
    return -c_ / b_;
  }
  Rational y_at(const Rational& x) const {
    if (is_vertical()) throw Error(Errc::VerticalLine, "evaluating a vertical line");
    return -(a_ * x + c_) / b_;
  }
  Rational eval(const Point2& p) const { return a_ * p.x + b_ * p.y + c_; }

  friend bool operator==(const Line2&, const Line2&) = default;

 private:
  Rational a_, b_, c_;
};

/// Plane {Ax + By + Cz + D = 0}; (A, B, C) is the normal.
class Plane3 {
 public:
  Plane3(Rational a, Rational b, Rational c, Rational d)
      : normal_{std::move(a), std::move(b), std::move(c)}, d_(std::move(d)) {
    if (normal_.is_zero()) throw Error(Errc::DegenerateTriangle, "plane with zero normal");
  }

  /// Plane through three points, normal oriented by (q - p) x (r - p).
  static Plane3 through(const Point3& p, const Point3& q, const Point3& r) {
    Vec3 n = cross(q - p, r - p);
    if (n.is_zero()) throw Error(Errc::DegenerateTriangle, "plane through collinear points");
    Rational d = -(n.x * p.x + n.y * p.y + n.z * p.z);
    return Plane3(n.x, n.y, n.z, d);
  }

  const Vec3& normal() const { return normal_; }
  const Rational& d() const { return d_; }
  Rational eval(const Point3& p) const {
    return normal_.x * p.x + normal_.y * p.y + normal_.z * p.z + d_;
  }

 private:
  Vec3 normal_;
  Rational d_;
};

inline Rational cross2(const Point2& p, const Point2& q, const Point2& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

inline Orientation orient2(const Point2& p, const Point2& q, const Point2& r) {
  return static_cast<Orientation>(cross2(p, q, r).sign());
}

inline Rational det3(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  return dot(q - p, cross(r - p, s - p));
}

inline Orientation3 orient3(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  return static_cast<Orientation3>(det3(p, q, r, s).sign());
}

inline PlaneSide plane_side(const Plane3& h, const Point3& p) {
  return static_cast<PlaneSide>(h.eval(p).sign());
}

namespace detail {

// p collinear with segment ab assumed; closed bounding-box test.
inline bool on_collinear_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool closed_segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                                      const Point2& q2) {
  int d1 = cross2(q1, q2, p1).sign();
  int d2 = cross2(q1, q2, p2).sign();
  int d3 = cross2(p1, p2, q1).sign();
  int d4 = cross2(p1, p2, q2).sign();
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_collinear_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_collinear_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_collinear_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_collinear_segment(p1, p2, q2)) return true;
  return false;
}

inline Point2 lerp(const Point2& p, const Point2& q, const Rational& t) {
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

inline Point3 lerp(const Point3& p, const Point3& q, const Rational& t) {
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y), p.z + t * (q.z - p.z)};
}

inline void require_nondegenerate(const Triangle2& t) {
  if (orient2(t[0], t[1], t[2]) == Orientation::Collinear)
    throw Error(Errc::DegenerateTriangle, "collinear triangle vertices");
}

inline void require_nondegenerate(const Triangle3& t) {
  if (cross(t[1] - t[0], t[2] - t[0]).is_zero())
    throw Error(Errc::DegenerateTriangle, "collinear triangle vertices");
}

inline void dedupe_cyclic(Polygon2& poly) {
  Polygon2 out;
  out.reserve(poly.size());
  for (auto& p : poly)
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  poly = std::move(out);
}

}  // namespace detail

/// True iff the closed segments intersect. Segments sharing an endpoint are
/// rejected with SharedEndpoint: crossing requires vertex-disjointness.
inline bool segments_cross(const Segment2& s1, const Segment2& s2) {
  if (s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b)
    throw Error(Errc::SharedEndpoint, "segments share an endpoint");
  return detail::closed_segments_intersect(s1.a, s1.b, s2.a, s2.b);
}

inline Point2 segment_intersection_point(const Segment2& s1, const Segment2& s2) {
  if (!segments_cross(s1, s2)) throw Error(Errc::NoIntersection, "segments do not intersect");
  Rational rx = s1.b.x - s1.a.x, ry = s1.b.y - s1.a.y;
  Rational sx = s2.b.x - s2.a.x, sy = s2.b.y - s2.a.y;
  Rational denom = rx * sy - ry * sx;
  if (denom.sign() == 0) throw Error(Errc::ParallelOverlap, "collinear overlapping segments");
  Rational t = ((s2.a.x - s1.a.x) * sy - (s2.a.y - s1.a.y) * sx) / denom;
  return detail::lerp(s1.a, s1.b, t);
}

/// Intersection point of two non-parallel lines.
inline Point2 line_intersection(const Line2& l1, const Line2& l2) {
  Rational det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.sign() == 0) throw Error(Errc::ParallelLines, "parallel lines");
  Rational x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  Rational y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return {x, y};
}

inline bool triangle_contains_2d(const Triangle2& t, const Point2& p) {
  detail::require_nondegenerate(t);
  int o = static_cast<int>(orient2(t[0], t[1], t[2]));
  for (int i = 0; i < 3; ++i) {
    if (cross2(t[i], t[(i + 1) % 3], p).sign() * o < 0) return false;
  }
  return true;
}

inline Triangle2 ccw(Triangle2 t) {
  if (orient2(t[0], t[1], t[2]) == Orientation::CW) std::swap(t[1], t[2]);
  return t;
}

/// Sutherland-Hodgman clip of a convex polygon by the closed triangle t.
/// Accepts degenerate one- and two-vertex inputs.
inline Polygon2 clip_convex_by_triangle(const Polygon2& poly, const Triangle2& tri) {
  detail::require_nondegenerate(tri);
  Triangle2 t = ccw(tri);
  Polygon2 cur = poly;
  detail::dedupe_cyclic(cur);
  for (int e = 0; e < 3 && !cur.empty(); ++e) {
    const Point2& a = t[e];
    const Point2& b = t[(e + 1) % 3];
    Polygon2 next;
    next.reserve(cur.size() + 2);
    std::size_t n = cur.size();
    std::vector<Rational> side(n);
    for (std::size_t i = 0; i < n; ++i) side[i] = cross2(a, b, cur[i]);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + n - 1) % n;
      bool cin = side[i].sign() >= 0;
      bool pin = side[j].sign() >= 0;
      if (cin != pin) {
        // strict sign change across the clip line
        Rational t_param = side[j] / (side[j] - side[i]);
        next.push_back(detail::lerp(cur[j], cur[i], t_param));
      }
      if (cin) next.push_back(cur[i]);
    }
    detail::dedupe_cyclic(next);
    cur = std::move(next);
  }
  return cur;
}

inline Polygon2 to_polygon(const Triangle2& t) {
  Triangle2 c = ccw(t);
  return {c[0], c[1], c[2]};
}

/// Lexicographically smallest vertex; polygon must be nonempty.
inline Point2 lexmin_vertex(const Polygon2& poly) { return *std::min_element(poly.begin(), poly.end()); }

/// Common intersection of closed triangles by iterative clipping.
inline Polygon2 common_intersection(std::span<const Triangle2> tris) {
  if (tris.empty()) return {};
  Polygon2 poly = to_polygon(tris[0]);
  for (std::size_t i = 1; i < tris.size() && !poly.empty(); ++i) poly = clip_convex_by_triangle(poly, tris[i]);
  return poly;
}

namespace detail {

// Drops the coordinate axis on which the normal has the largest magnitude.
inline Point2 project_drop_axis(const Point3& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.x, p.z};
    default: return {p.x, p.y};
  }
}

inline int dominant_axis(const Vec3& n) {
  Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  if (ax >= ay && ax >= az) return 0;
  if (ay >= az) return 1;
  return 2;
}

// Closed 2D triangles intersect iff no edge line strictly separates them.
inline bool triangles_intersect_2d(const Triangle2& t1, const Triangle2& t2) {
  auto separated_by_edges = [](const Triangle2& a, const Triangle2& b) {
    Triangle2 c = ccw(a);
    for (int e = 0; e < 3; ++e) {
      bool all_out = true;
      for (const auto& p : b)
        if (cross2(c[e], c[(e + 1) % 3], p).sign() >= 0) { all_out = false; break; }
      if (all_out) return true;
    }
    return false;
  };
  return !separated_by_edges(t1, t2) && !separated_by_edges(t2, t1);
}

// Parameters along `dir` of the set tri ∩ plane, given signed distances.
inline std::optional<std::pair<Rational, Rational>> plane_cut_interval(const Triangle3& tri,
                                                                        const std::array<int, 3>& s,
                                                                        const std::array<Rational, 3>& dist,
                                                                        const Vec3& dir) {
  std::vector<Rational> ts;
  for (int i = 0; i < 3; ++i) {
    if (s[i] == 0) ts.push_back(dot(dir, tri[i] - Point3{0, 0, 0}));
    int j = (i + 1) % 3;
    if (s[i] * s[j] < 0) {
      Rational t = dist[i] / (dist[i] - dist[j]);
      Point3 p = lerp(tri[i], tri[j], t);
      ts.push_back(dot(dir, p - Point3{0, 0, 0}));
    }
  }
  if (ts.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
  return std::make_pair(*lo, *hi);
}

}  // namespace detail

/// True iff the closed triangles have empty intersection in 3-space.
///
/// Non-coplanar case: both triangles meet the line common to their planes in
/// a closed interval; the triangles intersect iff those intervals overlap.
/// Coplanar case: 2D separating-axis test in a coordinate projection.
inline bool triangles_disjoint_3d(const Triangle3& t1, const Triangle3& t2) {
  detail::require_nondegenerate(t1);
  detail::require_nondegenerate(t2);
  Plane3 h1 = Plane3::through(t1[0], t1[1], t1[2]);
  Plane3 h2 = Plane3::through(t2[0], t2[1], t2[2]);

  std::array<Rational, 3> d2{h1.eval(t2[0]), h1.eval(t2[1]), h1.eval(t2[2])};
  std::array<int, 3> s2{d2[0].sign(), d2[1].sign(), d2[2].sign()};
  if ((s2[0] > 0 && s2[1] > 0 && s2[2] > 0) || (s2[0] < 0 && s2[1] < 0 && s2[2] < 0)) return true;

  std::array<Rational, 3> d1{h2.eval(t1[0]), h2.eval(t1[1]), h2.eval(t1[2])};
  std::array<int, 3> s1{d1[0].sign(), d1[1].sign(), d1[2].sign()};
  if ((s1[0] > 0 && s1[1] > 0 && s1[2] > 0) || (s1[0] < 0 && s1[1] < 0 && s1[2] < 0)) return true;

  if (s2[0] == 0 && s2[1] == 0 && s2[2] == 0) {
    int axis = detail::dominant_axis(h1.normal());
    Triangle2 a{detail::project_drop_axis(t1[0], axis), detail::project_drop_axis(t1[1], axis),
                detail::project_drop_axis(t1[2], axis)};
    Triangle2 b{detail::project_drop_axis(t2[0], axis), detail::project_drop_axis(t2[1], axis),
                detail::project_drop_axis(t2[2], axis)};
    return !detail::triangles_intersect_2d(a, b);
  }

  Vec3 dir = cross(h1.normal(), h2.normal());
  auto i1 = detail::plane_cut_interval(t1, s1, d1, dir);
  auto i2 = detail::plane_cut_interval(t2, s2, d2, dir);
  if (!i1 || !i2) return true;
  return std::max(i1->first, i2->first) > std::min(i1->second, i2->second);
}

}  // namespace geohyper
