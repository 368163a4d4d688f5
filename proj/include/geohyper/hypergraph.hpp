#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"

namespace geohyper {

using VertexId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

enum class ViolationKind { EqualX, EqualXY, Collinear, Coplanar };

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::EqualX: return "equal-x";
    case ViolationKind::EqualXY: return "equal-xy";
    case ViolationKind::Collinear: return "collinear";
    case ViolationKind::Coplanar: return "coplanar";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> indices;

  std::string describe() const {
    std::string s = violation_name(kind);
    s += " (";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s + ")";
  }
};

/// First violating tuple in lexicographic order, or nullopt when the points
/// are in (strengthened) general position: distinct x and no three collinear.
inline std::optional<Violation> validate_general_position(std::span<const Point2> pts) {
  const auto n = static_cast<VertexId>(pts.size());
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (pts[i].x == pts[j].x) return Violation{ViolationKind::EqualX, {i, j}};
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      for (VertexId k = j + 1; k < n; ++k)
        if (orient2(pts[i], pts[j], pts[k]) == Orientation::Collinear)
          return Violation{ViolationKind::Collinear, {i, j, k}};
  return std::nullopt;
}

/// 3-space variant: distinct (x, y) projections, no three collinear, no four
/// coplanar.
inline std::optional<Violation> validate_general_position(std::span<const Point3> pts) {
  const auto n = static_cast<VertexId>(pts.size());
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) return Violation{ViolationKind::EqualXY, {i, j}};
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      for (VertexId k = j + 1; k < n; ++k)
        if (cross(pts[j] - pts[i], pts[k] - pts[i]).is_zero())
          return Violation{ViolationKind::Collinear, {i, j, k}};
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      for (VertexId k = j + 1; k < n; ++k)
        for (VertexId l = k + 1; l < n; ++l)
          if (orient3(pts[i], pts[j], pts[k], pts[l]) == Orientation3::Coplanar)
            return Violation{ViolationKind::Coplanar, {i, j, k, l}};
  return std::nullopt;
}

/// Vertex set of a geometric hypergraph, validated for general position on
/// construction.
class PointSet {
 public:
  explicit PointSet(std::vector<Point2> pts, std::optional<std::uint64_t> seed = std::nullopt)
      : dim_(2), p2_(std::move(pts)), seed_(seed) {
    if (auto v = validate_general_position(std::span<const Point2>(p2_)))
      throw Error(Errc::GeneralPositionViolation, v->describe());
  }
  explicit PointSet(std::vector<Point3> pts, std::optional<std::uint64_t> seed = std::nullopt)
      : dim_(3), p3_(std::move(pts)), seed_(seed) {
    if (auto v = validate_general_position(std::span<const Point3>(p3_)))
      throw Error(Errc::GeneralPositionViolation, v->describe());
  }

  int dimension() const { return dim_; }
  std::size_t size() const { return dim_ == 2 ? p2_.size() : p3_.size(); }
  std::optional<std::uint64_t> seed() const { return seed_; }

  const std::vector<Point2>& points2() const { return p2_; }
  const std::vector<Point3>& points3() const { return p3_; }
  const Point2& p2(VertexId i) const { return p2_.at(i); }
  const Point3& p3(VertexId i) const { return p3_.at(i); }

  /// Subset in the given index order (still in general position).
  PointSet subset(std::span<const VertexId> idx) const {
    if (dim_ == 2) {
      std::vector<Point2> v;
      for (auto i : idx) v.push_back(p2_.at(i));
      return PointSet(std::move(v));
    }
    std::vector<Point3> v;
    for (auto i : idx) v.push_back(p3_.at(i));
    return PointSet(std::move(v));
  }

 private:
  int dim_;
  std::vector<Point2> p2_;
  std::vector<Point3> p3_;
  std::optional<std::uint64_t> seed_;
};

/// Sorted, distinct vertex indices of an edge.
struct Simplex {
  std::vector<VertexId> v;

  Simplex() = default;
  Simplex(std::initializer_list<VertexId> ids) : v(ids) { std::sort(v.begin(), v.end()); }
  explicit Simplex(std::vector<VertexId> ids) : v(std::move(ids)) { std::sort(v.begin(), v.end()); }

  std::size_t size() const { return v.size(); }
  VertexId operator[](std::size_t i) const { return v[i]; }
  bool contains(VertexId x) const { return std::binary_search(v.begin(), v.end(), x); }
  bool disjoint(const Simplex& o) const {
    for (auto x : v)
      if (o.contains(x)) return false;
    return true;
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v <=> b.v; }
};

class GeometricHypergraph {
 public:
  GeometricHypergraph(PointSet points, int uniformity, std::vector<Simplex> edges = {})
      : points_(std::move(points)), r_(uniformity), edges_(std::move(edges)) {
    if (r_ < 2 || r_ > points_.dimension() + 1)
      throw Error(Errc::InvalidHypergraph, "uniformity " + std::to_string(r_) + " unsupported in dimension " +
                                               std::to_string(points_.dimension()));
    std::vector<Simplex> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::InvalidHypergraph, "duplicate edge");
    for (const auto& e : edges_) check_edge(e);
  }

  const PointSet& points() const { return points_; }
  int dimension() const { return points_.dimension(); }
  int uniformity() const { return r_; }
  std::size_t num_vertices() const { return points_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Simplex>& edges() const { return edges_; }
  const Simplex& edge(std::size_t i) const { return edges_.at(i); }

  Triangle2 triangle2(std::size_t e) const {
    const auto& s = edges_.at(e);
    return {points_.p2(s[0]), points_.p2(s[1]), points_.p2(s[2])};
  }
  Triangle3 triangle3(std::size_t e) const {
    const auto& s = edges_.at(e);
    return {points_.p3(s[0]), points_.p3(s[1]), points_.p3(s[2])};
  }
  Segment2 segment2(std::size_t e) const {
    const auto& s = edges_.at(e);
    return {points_.p2(s[0]), points_.p2(s[1])};
  }

  std::optional<std::size_t> find_edge(const Simplex& s) const {
    auto it = std::find(edges_.begin(), edges_.end(), s);
    if (it == edges_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

 private:
  void check_edge(const Simplex& e) const {
    if (static_cast<int>(e.size()) != r_) throw Error(Errc::UniformityMismatch, "edge size differs from uniformity");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= points_.size()) throw Error(Errc::InvalidHypergraph, "vertex index out of range");
      if (i > 0 && e[i] == e[i - 1]) throw Error(Errc::InvalidHypergraph, "repeated vertex in edge");
    }
    // Affine independence follows from general position for r <= d + 1.
  }

  PointSet points_;
  int r_;
  std::vector<Simplex> edges_;
};

// ---------------------------------------------------------------------------
// Base / side classification (plane, r = 3)

enum class ApexPosition { Above, Below };

struct BaseDecomposition {
  VertexPair base;   // (left endpoint, right endpoint) by x
  VertexPair left;   // (base left endpoint, apex)
  VertexPair right;  // (apex, base right endpoint)
  VertexId apex;
  ApexPosition position;

  VertexPair base_key() const { return std::minmax(base.first, base.second); }
};

inline BaseDecomposition classify_base(const PointSet& ps, const Simplex& e) {
  if (ps.dimension() != 2 || e.size() != 3)
    throw Error(Errc::UniformityMismatch, "classify_base needs a plane triangle");
  std::array<Rational, 3> proj;
  for (int s = 0; s < 3; ++s) proj[s] = abs(ps.p2(e[s]).x - ps.p2(e[(s + 1) % 3]).x);
  int best = 0;
  for (int s = 1; s < 3; ++s)
    if (proj[s] > proj[best]) best = s;
  for (int s = 0; s < 3; ++s)
    if (s != best && proj[s] == proj[best]) throw Error(Errc::TieBreak, "two sides with equal x-projection");

  VertexId u = e[best], w = e[(best + 1) % 3], apex = e[(best + 2) % 3];
  if (ps.p2(w).x < ps.p2(u).x) std::swap(u, w);
  BaseDecomposition d;
  d.base = {u, w};
  d.left = {u, apex};
  d.right = {apex, w};
  d.apex = apex;
  // u is left of w, so "above the base line" is a counter-clockwise turn.
  d.position = orient2(ps.p2(u), ps.p2(w), ps.p2(apex)) == Orientation::CCW ? ApexPosition::Above
                                                                            : ApexPosition::Below;
  return d;
}

struct BaseGroup {
  VertexPair base;
  std::vector<std::size_t> edges;
};

/// Partition of E(H) by base pair, sorted by canonical key (u < v).
inline std::vector<BaseGroup> group_by_base(const GeometricHypergraph& h) {
  if (h.dimension() != 2 || h.uniformity() != 3)
    throw Error(Errc::UniformityMismatch, "group_by_base needs a plane 3-hypergraph");
  std::map<VertexPair, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    groups[classify_base(h.points(), h.edge(i)).base_key()].push_back(i);
  std::vector<BaseGroup> out;
  out.reserve(groups.size());
  for (auto& [k, v] : groups) out.push_back({k, std::move(v)});
  return out;
}

/// Geometric graph of the bases of all edges whose apex is v.
struct LinkGraph {
  VertexId apex;
  std::vector<VertexPair> bases;   // canonical (u < v)
  std::vector<std::size_t> edges;  // originating hyperedge for each base
};

inline LinkGraph link_graph(const GeometricHypergraph& h, VertexId v, bool above_only = false) {
  if (h.dimension() != 2 || h.uniformity() != 3)
    throw Error(Errc::UniformityMismatch, "link_graph needs a plane 3-hypergraph");
  LinkGraph g{v, {}, {}};
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (!h.edge(i).contains(v)) continue;
    auto d = classify_base(h.points(), h.edge(i));
    if (d.apex != v) continue;
    if (above_only && d.position != ApexPosition::Above) continue;
    g.bases.push_back(d.base_key());
    g.edges.push_back(i);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Constructions and generators

namespace detail {

inline void for_each_combination(std::size_t n, std::size_t r, const std::function<void(const std::vector<VertexId>&)>& f) {
  if (r > n) return;
  std::vector<VertexId> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<VertexId>(i);
  while (true) {
    f(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Uniform integer in [-bound, bound]. Modular reduction of the raw engine
// output keeps the stream identical across standard library implementations.
inline long draw_coord(std::mt19937_64& rng, long bound) {
  auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(rng() % span) - bound;
}

}  // namespace detail

using detail::binomial;

/// All r-subsets of the vertex set that contain `center`.
inline GeometricHypergraph star_construction(const PointSet& ps, VertexId center, int r) {
  if (center >= ps.size()) throw Error(Errc::InvalidHypergraph, "star center out of range");
  std::vector<Simplex> edges;
  std::vector<VertexId> others;
  for (VertexId i = 0; i < ps.size(); ++i)
    if (i != center) others.push_back(i);
  detail::for_each_combination(others.size(), static_cast<std::size_t>(r - 1), [&](const std::vector<VertexId>& c) {
    std::vector<VertexId> s{center};
    for (auto i : c) s.push_back(others[i]);
    edges.emplace_back(std::move(s));
  });
  return GeometricHypergraph(ps, r, std::move(edges));
}

/// Complete r-uniform hypergraph: every r-subset is an edge.
inline GeometricHypergraph complete_hypergraph(const PointSet& ps, int r) {
  std::vector<Simplex> edges;
  detail::for_each_combination(ps.size(), static_cast<std::size_t>(r),
                               [&](const std::vector<VertexId>& c) { edges.emplace_back(c); });
  return GeometricHypergraph(ps, r, std::move(edges));
}

inline constexpr long kCoordinateBound = 1'000'000;
inline constexpr int kMaxRetriesPerPoint = 1000;

/// Integer points drawn uniformly from [-bound, bound]^d, rejection-resampled
/// point by point until general position holds.
inline PointSet generate_random(int d, std::size_t n, std::uint64_t seed, long bound = kCoordinateBound) {
  if (d != 2 && d != 3) throw Error(Errc::GenerationFailed, "dimension must be 2 or 3");
  std::mt19937_64 rng(seed);
  if (d == 2) {
    std::vector<Point2> pts;
    while (pts.size() < n) {
      bool placed = false;
      for (int attempt = 0; attempt < kMaxRetriesPerPoint && !placed; ++attempt) {
        Point2 p{detail::draw_coord(rng, bound), detail::draw_coord(rng, bound)};
        pts.push_back(p);
        bool ok = true;
        const std::size_t last = pts.size() - 1;
        for (std::size_t i = 0; i < last && ok; ++i) {
          if (pts[i].x == p.x) ok = false;
          for (std::size_t j = i + 1; j < last && ok; ++j)
            if (orient2(pts[i], pts[j], p) == Orientation::Collinear) ok = false;
        }
        if (ok) placed = true;
        else pts.pop_back();
      }
      if (!placed) throw Error(Errc::GenerationFailed, "rejection sampling exhausted");
    }
    return PointSet(std::move(pts), seed);
  }
  std::vector<Point3> pts;
  while (pts.size() < n) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRetriesPerPoint && !placed; ++attempt) {
      Point3 p{detail::draw_coord(rng, bound), detail::draw_coord(rng, bound), detail::draw_coord(rng, bound)};
      const std::size_t m = pts.size();
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (pts[i].x == p.x && pts[i].y == p.y) ok = false;
        for (std::size_t j = i + 1; j < m && ok; ++j) {
          if (cross(pts[j] - pts[i], p - pts[i]).is_zero()) ok = false;
          for (std::size_t k = j + 1; k < m && ok; ++k)
            if (orient3(pts[i], pts[j], pts[k], p) == Orientation3::Coplanar) ok = false;
        }
      }
      if (ok) {
        pts.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) throw Error(Errc::GenerationFailed, "rejection sampling exhausted");
  }
  return PointSet(std::move(pts), seed);
}

/// True iff the points, in the given cyclic order, are the vertices of a
/// strictly convex polygon traversed clockwise.
inline bool is_convex_clockwise(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient2(a, b, pts[j]) != Orientation::CW) return false;
    }
  }
  return true;
}

/// Points in convex position, stored in clockwise hull order. Points are
/// integer roundings of random angles on a circle of radius `radius`; whole
/// sets are resampled until convexity and general position hold exactly.
inline PointSet generate_convex(std::size_t n, std::uint64_t seed, long radius = kCoordinateBound) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRetriesPerPoint; ++attempt) {
    std::vector<double> angles(n);
    for (auto& a : angles) a = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
    std::sort(angles.begin(), angles.end(), std::greater<>());  // decreasing angle = clockwise
    std::vector<Point2> pts;
    pts.reserve(n);
    for (double a : angles)
      pts.push_back({static_cast<long>(std::llround(radius * std::cos(a))),
                     static_cast<long>(std::llround(radius * std::sin(a)))});
    if (!is_convex_clockwise(pts)) continue;
    if (validate_general_position(std::span<const Point2>(pts))) continue;
    return PointSet(std::move(pts), seed);
  }
  throw Error(Errc::GenerationFailed, "convex rejection sampling exhausted");
}

}  // namespace geohyper
