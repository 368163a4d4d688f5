#pragma once

// Exhaustive forbidden-pattern detectors. Every search walks sorted
// edge-index tuples in lexicographic order and returns the first hit, so
// results are deterministic.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"
#include "geohyper/hypergraph.hpp"

namespace geohyper {

enum class PatternKind { StronglyCrossing, PairwiseDisjoint, PairwiseCrossing, ConvexClockwise };

inline const char* pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::StronglyCrossing: return "strongly-crossing";
    case PatternKind::PairwiseDisjoint: return "disjoint";
    case PatternKind::PairwiseCrossing: return "crossing-segments";
    case PatternKind::ConvexClockwise: return "convex";
  }
  return "unknown";
}

inline PatternKind parse_pattern(const std::string& s) {
  if (s == "strongly-crossing" || s == "sc") return PatternKind::StronglyCrossing;
  if (s == "disjoint" || s == "d") return PatternKind::PairwiseDisjoint;
  if (s == "crossing-segments") return PatternKind::PairwiseCrossing;
  if (s == "convex") return PatternKind::ConvexClockwise;
  throw Error(Errc::ParseError, "unknown pattern '" + s + "'");
}

struct PatternSpec {
  PatternKind kind;
  int k;

  PatternSpec(PatternKind kind_, int k_) : kind(kind_), k(k_) {
    if (k < 2) throw Error(Errc::PreconditionUnmet, "pattern multiplicity must be at least 2");
  }
};

struct Witness {
  std::vector<std::size_t> edges;
  std::optional<Point2> certificate;
};

namespace detail {

inline void require_plane_triangles(const GeometricHypergraph& h) {
  if (h.dimension() != 2 || h.uniformity() != 3)
    throw Error(Errc::UniformityMismatch, "needs a plane 3-hypergraph");
}

inline void require_space_triangles(const GeometricHypergraph& h) {
  if (h.dimension() != 3 || h.uniformity() != 3)
    throw Error(Errc::UniformityMismatch, "needs a 3-uniform hypergraph in 3-space");
}

inline std::uint64_t vertex_mask(const Simplex& s) {
  std::uint64_t m = 0;
  for (auto v : s.v) m |= std::uint64_t{1} << v;
  return m;
}

inline void require_mask_capacity(const GeometricHypergraph& h) {
  if (h.num_vertices() > 64) throw Error(Errc::BudgetExceeded, "exhaustive detectors support at most 64 vertices");
}

// Generic lexicographic DFS over vertex-disjoint k-tuples of `candidates`
// (edge indices in increasing order). `accept(tuple)` decides whether a
// partial tuple may be extended; `done(tuple)` is called on full tuples and
// stops the search by returning true.
inline bool disjoint_tuple_search(const GeometricHypergraph& h, std::span<const std::size_t> candidates, int k,
                                  const std::function<bool(const std::vector<std::size_t>&)>& accept,
                                  const std::function<bool(const std::vector<std::size_t>&)>& done) {
  require_mask_capacity(h);
  std::vector<std::uint64_t> masks(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) masks[i] = vertex_mask(h.edge(candidates[i]));
  std::vector<std::size_t> tuple;
  std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t used) -> bool {
    if (static_cast<int>(tuple.size()) == k) return done(tuple);
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (masks[i] & used) continue;
      tuple.push_back(candidates[i]);
      if (accept(tuple) && rec(i + 1, used | masks[i])) return true;
      tuple.pop_back();
    }
    return false;
  };
  return rec(0, 0);
}

inline std::vector<std::size_t> all_edges(const GeometricHypergraph& h) {
  std::vector<std::size_t> v(h.num_edges());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace detail

/// Exact common point of the listed plane triangles if they are pairwise
/// vertex-disjoint and share a point: the lexicographically smallest vertex
/// of their common intersection.
inline std::optional<Point2> strongly_crossing_certificate(const GeometricHypergraph& h,
                                                           std::span<const std::size_t> edges) {
  detail::require_plane_triangles(h);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!h.edge(edges[i]).disjoint(h.edge(edges[j]))) return std::nullopt;
  std::vector<Triangle2> tris;
  for (auto e : edges) tris.push_back(h.triangle2(e));
  Polygon2 poly = common_intersection(tris);
  if (poly.empty()) return std::nullopt;
  return lexmin_vertex(poly);
}

/// First k pairwise vertex-disjoint plane triangles with a common point.
inline std::optional<Witness> find_strongly_crossing(const GeometricHypergraph& h, int k,
                                                     std::span<const std::size_t> candidates) {
  detail::require_plane_triangles(h);
  PatternSpec spec(PatternKind::StronglyCrossing, k);
  std::vector<Triangle2> tris(h.num_edges());
  for (auto e : candidates) tris[e] = h.triangle2(e);
  std::vector<Polygon2> stack;  // stack[i] = intersection of the first i+1 triangles
  std::optional<Witness> out;
  detail::disjoint_tuple_search(
      h, candidates, spec.k,
      [&](const std::vector<std::size_t>& t) {
        stack.resize(t.size() - 1);
        Polygon2 poly = t.size() == 1 ? to_polygon(tris[t.back()]) : clip_convex_by_triangle(stack.back(), tris[t.back()]);
        if (poly.empty()) return false;
        stack.push_back(std::move(poly));
        return true;
      },
      [&](const std::vector<std::size_t>& t) {
        out = Witness{t, lexmin_vertex(stack.back())};
        return true;
      });
  return out;
}

inline std::optional<Witness> find_strongly_crossing(const GeometricHypergraph& h, int k) {
  auto all = detail::all_edges(h);
  return find_strongly_crossing(h, k, all);
}

/// First k edges in 3-space that are pairwise vertex-disjoint and pairwise
/// disjoint as closed triangles.
inline std::optional<Witness> find_pairwise_disjoint(const GeometricHypergraph& h, int k,
                                                     std::span<const std::size_t> candidates) {
  detail::require_space_triangles(h);
  PatternSpec spec(PatternKind::PairwiseDisjoint, k);
  std::vector<Triangle3> tris(h.num_edges());
  for (auto e : candidates) tris[e] = h.triangle3(e);
  std::optional<Witness> out;
  detail::disjoint_tuple_search(
      h, candidates, spec.k,
      [&](const std::vector<std::size_t>& t) {
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
          if (!triangles_disjoint_3d(tris[t[i]], tris[t.back()])) return false;
        return true;
      },
      [&](const std::vector<std::size_t>& t) {
        out = Witness{t, std::nullopt};
        return true;
      });
  return out;
}

inline std::optional<Witness> find_pairwise_disjoint(const GeometricHypergraph& h, int k) {
  auto all = detail::all_edges(h);
  return find_pairwise_disjoint(h, k, all);
}

/// Crossing for segments that may share endpoints: shared endpoints mean
/// "not crossing".
inline bool segments_cross_disjoint(const Segment2& a, const Segment2& b) {
  try {
    return segments_cross(a, b);
  } catch (const Error& e) {
    if (e.code() == Errc::SharedEndpoint) return false;
    throw;
  }
}

/// First k pairwise crossing segments (indices into `segments`).
inline std::optional<std::vector<std::size_t>> find_pairwise_crossing_segments(std::span<const Segment2> segments,
                                                                               int k) {
  PatternSpec spec(PatternKind::PairwiseCrossing, k);
  const std::size_t m = segments.size();
  std::vector<std::vector<char>> cr(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) cr[i][j] = cr[j][i] = segments_cross_disjoint(segments[i], segments[j]);
  std::vector<std::size_t> tuple;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(tuple.size()) == spec.k) return true;
    for (std::size_t i = start; i < m; ++i) {
      bool ok = true;
      for (auto t : tuple)
        if (!cr[t][i]) { ok = false; break; }
      if (!ok) continue;
      tuple.push_back(i);
      if (rec(i + 1)) return true;
      tuple.pop_back();
    }
    return false;
  };
  if (rec(0)) return tuple;
  return std::nullopt;
}

/// Geometric-graph overload (uniformity 2 in the plane).
inline std::optional<std::vector<std::size_t>> find_pairwise_crossing_segments(const GeometricHypergraph& g, int k) {
  if (g.dimension() != 2 || g.uniformity() != 2)
    throw Error(Errc::UniformityMismatch, "needs a plane geometric graph (uniformity 2)");
  std::vector<Segment2> segs;
  for (std::size_t i = 0; i < g.num_edges(); ++i) segs.push_back(g.segment2(i));
  return find_pairwise_crossing_segments(segs, k);
}

/// True iff the vertex-disjoint edges, read in index (clockwise) order,
/// realize x_1..x_k y_1..y_k z_1..z_k up to cyclic rotation.
inline bool is_clockwise_block_pattern(const GeometricHypergraph& h, std::span<const std::size_t> edges) {
  const std::size_t k = edges.size();
  std::vector<std::pair<VertexId, std::size_t>> labelled;
  for (std::size_t j = 0; j < k; ++j)
    for (auto v : h.edge(edges[j]).v) labelled.push_back({v, j});
  std::sort(labelled.begin(), labelled.end());
  for (std::size_t i = 0; i + 1 < labelled.size(); ++i)
    if (labelled[i].first == labelled[i + 1].first) return false;
  const std::size_t len = labelled.size();
  if (len != 3 * k) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (labelled[i].second != labelled[(i + k) % len].second) return false;
  return true;
}

/// First k edges whose 3k vertices appear in the clockwise block pattern.
/// Points must be stored in clockwise convex-position order.
inline std::optional<Witness> find_convex_pattern(const GeometricHypergraph& h, int k) {
  detail::require_plane_triangles(h);
  PatternSpec spec(PatternKind::ConvexClockwise, k);
  if (!is_convex_clockwise(h.points().points2()))
    throw Error(Errc::NotConvexPosition, "points are not in clockwise convex position");
  auto all = detail::all_edges(h);
  std::optional<Witness> out;
  detail::disjoint_tuple_search(
      h, all, spec.k, [](const std::vector<std::size_t>&) { return true; },
      [&](const std::vector<std::size_t>& t) {
        if (!is_clockwise_block_pattern(h, t)) return false;
        out = Witness{t, std::nullopt};
        return true;
      });
  return out;
}

}  // namespace geohyper
