#pragma once

// Witness extractors that turn the counting arguments into constructions:
// three strongly crossing triangles from four crossing link-graph bases,
// greedy selection of k strongly crossing triangles over a top level, and
// the red/blue coloring plus sphere-link route to two disjoint triangles in
// 3-space.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "geohyper/arrangement.hpp"
#include "geohyper/detect.hpp"
#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"
#include "geohyper/hypergraph.hpp"

namespace geohyper {

namespace detail {

inline Segment2 base_segment(const PointSet& ps, const VertexPair& b) { return {ps.p2(b.first), ps.p2(b.second)}; }

inline std::size_t require_edge(const GeometricHypergraph& h, VertexId a, VertexId b, VertexId c,
                                const std::string& what) {
  auto e = h.find_edge(Simplex{a, b, c});
  if (!e) throw Error(Errc::PreconditionUnmet, what + ": triangle {" + std::to_string(a) + "," + std::to_string(b) +
                                                    "," + std::to_string(c) + "} is not an edge");
  return *e;
}

inline VertexPair canonical(VertexPair p) { return std::minmax(p.first, p.second); }

inline void require_pairwise_crossing(const PointSet& ps, std::span<const VertexPair> bases) {
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (!segments_cross_disjoint(base_segment(ps, bases[i]), base_segment(ps, bases[j])))
        throw Error(Errc::PreconditionUnmet, "bases " + std::to_string(i) + " and " + std::to_string(j) +
                                                 " are not crossing");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Four crossing bases at a common apex -> three strongly crossing edges

struct FourCrossingExtraction {
  int case_id = 0;                     // 1, 2 or 3: bases visited by the top level minus one
  std::vector<std::size_t> visited;    // indices into the input bases, left to right along L
  std::optional<bool> crosses_right;   // case 2: whether the hidden base meets the middle one right of its piece
  std::array<std::size_t, 3> edges{};  // edges of H; edges[0] has apex v
  Point2 point;                        // common point p of the three edges
};

inline constexpr std::size_t kDefaultMinApexes = 3;

/// Apexes of the edges of H whose base is `base`, sorted by vertex index.
inline std::vector<VertexId> base_group_apexes(const GeometricHypergraph& h, VertexPair base) {
  base = detail::canonical(base);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (!e.contains(base.first) || !e.contains(base.second)) continue;
    auto d = classify_base(h.points(), e);
    if (d.base_key() == base) out.push_back(d.apex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Runs the three-case argument for four pairwise crossing bases in the link
/// graph of v and returns three vertex-disjoint edges sharing a point.
inline FourCrossingExtraction extract_sc3_from_four_crossing(const GeometricHypergraph& h, VertexId v,
                                                             const std::array<VertexPair, 4>& bases_in,
                                                             std::size_t min_apexes = kDefaultMinApexes) {
  detail::require_plane_triangles(h);
  const PointSet& ps = h.points();
  std::array<VertexPair, 4> bases;
  for (int i = 0; i < 4; ++i) bases[i] = detail::canonical(bases_in[i]);
  detail::require_pairwise_crossing(ps, bases);

  std::array<std::size_t, 4> apex_edge{};
  for (int i = 0; i < 4; ++i) {
    apex_edge[i] = detail::require_edge(h, v, bases[i].first, bases[i].second, "link graph");
    auto d = classify_base(ps, h.edge(apex_edge[i]));
    if (d.base_key() != bases[i] || d.position != ApexPosition::Above)
      throw Error(Errc::PreconditionUnmet, "v is not strictly above base " + std::to_string(i));
  }

  std::array<Segment2, 4> segs{detail::base_segment(ps, bases[0]), detail::base_segment(ps, bases[1]),
                               detail::base_segment(ps, bases[2]), detail::base_segment(ps, bases[3])};
  TopLevel top = top_level(segs);

  FourCrossingExtraction out;
  out.visited = top.pieces;
  out.case_id = static_cast<int>(top.pieces.size()) - 1;
  const auto& vis = out.visited;
  const Triangle2 apex_tri[4] = {h.triangle2(apex_edge[0]), h.triangle2(apex_edge[1]), h.triangle2(apex_edge[2]),
                                 h.triangle2(apex_edge[3])};

  std::optional<std::size_t> holder;  // base whose triangle with v contains p
  std::size_t pa = 0, pb = 0;         // bases through p
  Point2 p;
  std::vector<std::size_t> hidden;
  for (std::size_t i = 0; i < 4; ++i)
    if (std::find(vis.begin(), vis.end(), i) == vis.end()) hidden.push_back(i);

  switch (vis.size()) {
    case 2: {
      pa = vis[0];
      pb = vis[1];
      p = top.breakpoints[0];
      for (auto j : hidden)
        if (triangle_contains_2d(apex_tri[j], p)) { holder = j; break; }
      break;
    }
    case 3: {
      std::size_t j = hidden.front();
      Point2 q = segment_intersection_point(segs[j], segs[vis[1]]);
      const Point2& left_bp = top.breakpoints[0];
      const Point2& right_bp = top.breakpoints[1];
      auto try_branch = [&](bool right) {
        pa = right ? vis[1] : vis[0];
        pb = right ? vis[2] : vis[1];
        p = right ? right_bp : left_bp;
        out.crosses_right = right;
        if (triangle_contains_2d(apex_tri[j], p)) holder = j;
      };
      if (q.x > right_bp.x) {
        try_branch(true);
      } else if (q.x < left_bp.x) {
        try_branch(false);
      } else {
        // hidden base touches the middle piece: only possible with concurrent lines
        try_branch(true);
        if (!holder) try_branch(false);
      }
      break;
    }
    case 4: {
      pa = vis[1];
      pb = vis[2];
      p = top.breakpoints[1];
      for (std::size_t j : {vis[0], vis[3]})
        if (triangle_contains_2d(apex_tri[j], p)) { holder = j; break; }
      break;
    }
    default:
      throw Error(Errc::CaseFallthrough, "top level visits " + std::to_string(vis.size()) + " bases");
  }
  if (!holder) throw Error(Errc::CaseFallthrough, "crossing point not covered by the apex triangle");

  auto apex_a = base_group_apexes(h, bases[pa]);
  auto apex_b = base_group_apexes(h, bases[pb]);
  if (apex_a.size() < min_apexes || apex_b.size() < min_apexes)
    throw Error(Errc::PreconditionUnmet, "base group has fewer than " + std::to_string(min_apexes) + " apexes");

  std::set<VertexId> used{v, bases[*holder].first, bases[*holder].second, bases[pa].first, bases[pa].second,
                          bases[pb].first, bases[pb].second};
  for (VertexId x : apex_a) {
    if (used.count(x)) continue;
    for (VertexId y : apex_b) {
      if (y == x || used.count(y)) continue;
      out.edges = {apex_edge[*holder], *h.find_edge(Simplex{x, bases[pa].first, bases[pa].second}),
                   *h.find_edge(Simplex{y, bases[pb].first, bases[pb].second})};
      out.point = p;
      for (auto e : out.edges)
        if (!triangle_contains_2d(h.triangle2(e), p))
          throw Error(Errc::CaseFallthrough, "extracted edge misses the crossing point");
      if (!strongly_crossing_certificate(h, out.edges))
        throw Error(Errc::CaseFallthrough, "extracted triple fails re-verification");
      return out;
    }
  }
  throw Error(Errc::PreconditionUnmet, "apex supply too small to avoid vertex collisions");
}

// ---------------------------------------------------------------------------
// Greedy selection over the top level plus one-dimensional Helly

struct GreedySelection {
  std::vector<VertexPair> bases;          // sorted by increasing slope
  std::vector<VertexId> apexes;           // apexes[i] was consumed at step i
  std::vector<std::size_t> edges;         // t_i = conv(bases[i] ∪ apexes[i])
  std::vector<Rational> right_crossings;  // x where t_i's right side meets L
  std::vector<XInterval> intervals;       // x-projection of t_i ∩ L
  bool pairwise_intersecting = false;
  Rational helly_x;
  Point2 point;  // common point on L
};

inline GreedySelection greedy_helly_selection(const GeometricHypergraph& h, std::span<const VertexPair> bases_in,
                                              std::span<const VertexId> apexes_in) {
  detail::require_plane_triangles(h);
  const PointSet& ps = h.points();
  const std::size_t k = bases_in.size();
  if (k < 2 || apexes_in.size() != k)
    throw Error(Errc::PreconditionUnmet, "need k >= 2 bases and exactly k apexes");

  GreedySelection out;
  for (auto b : bases_in) out.bases.push_back(detail::canonical(b));
  detail::require_pairwise_crossing(ps, out.bases);
  std::vector<Rational> slope(k);
  for (std::size_t i = 0; i < k; ++i) slope[i] = Line2::supporting(detail::base_segment(ps, out.bases[i])).slope();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return slope[a] < slope[b]; });
  std::vector<VertexPair> sorted;
  for (auto i : order) sorted.push_back(out.bases[i]);
  out.bases = std::move(sorted);

  // edge_of[i][j] = conv(apexes_in[i] ∪ bases[j])
  std::vector<std::vector<std::size_t>> edge_of(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto e = detail::require_edge(h, apexes_in[i], out.bases[j].first, out.bases[j].second, "apex set");
      auto d = classify_base(ps, h.edge(e));
      if (d.base_key() != out.bases[j] || d.position != ApexPosition::Above)
        throw Error(Errc::PreconditionUnmet, "apex " + std::to_string(apexes_in[i]) + " is not above base " +
                                                 std::to_string(j));
      edge_of[i][j] = e;
    }

  std::vector<Segment2> segs;
  for (auto& b : out.bases) segs.push_back(detail::base_segment(ps, b));
  TopLevel top = top_level(segs);

  std::vector<bool> consumed(k, false);
  for (std::size_t step = 0; step < k; ++step) {
    const Segment2& base = segs[step];
    std::optional<std::size_t> best;
    Rational best_x;
    for (std::size_t i = 0; i < k; ++i) {
      if (consumed[i]) continue;
      auto c = segment_top_level_crossing(top, ps.p2(apexes_in[i]), base.right());
      if (!c) throw Error(Errc::PreconditionUnmet, "right side does not meet the top level");
      bool better = !best || c->x > best_x || (c->x == best_x && apexes_in[i] < apexes_in[*best]);
      if (better) {
        best = i;
        best_x = c->x;
      }
    }
    consumed[*best] = true;
    out.apexes.push_back(apexes_in[*best]);
    out.edges.push_back(edge_of[*best][step]);
    out.right_crossings.push_back(best_x);
  }

  for (auto e : out.edges) {
    auto parts = triangle_on_top_level(top, h.triangle2(e));
    if (parts.size() != 1)
      throw Error(Errc::IntervalDisconnected, "edge meets the top level in " + std::to_string(parts.size()) +
                                                  " components");
    out.intervals.push_back(parts.front());
  }
  out.pairwise_intersecting = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!intervals_meet(out.intervals[i], out.intervals[j])) out.pairwise_intersecting = false;

  auto x = helly_1d(out.intervals);
  if (!x) throw Error(Errc::HellyEmpty, "selected edges have no common point on the top level");
  out.helly_x = *x;
  out.point = top.lift(*x);
  for (auto e : out.edges)
    if (!triangle_contains_2d(h.triangle2(e), out.point))
      throw Error(Errc::HellyEmpty, "lifted point escapes a selected edge");
  if (!strongly_crossing_certificate(h, out.edges))
    throw Error(Errc::HellyEmpty, "selected edges fail re-verification");
  return out;
}

// ---------------------------------------------------------------------------
// Red/blue coloring in 3-space

enum class EdgeColor { Red, Blue };

struct EdgeColoring {
  std::vector<EdgeColor> color;
  std::vector<std::size_t> blue_degree;                    // per vertex
  std::map<VertexPair, std::vector<std::size_t>> groups;   // E_uv, nonempty only
  std::map<VertexPair, std::vector<std::size_t>> red_in;   // red by the criterion of E_uv
  std::size_t red_count = 0;
  std::size_t blue_count = 0;
};

/// Colors an edge red when, for one of its vertex pairs uv, every member of
/// E_uv lies in one closed half-space of the edge's plane.
inline EdgeColoring red_blue_color(const GeometricHypergraph& h) {
  detail::require_space_triangles(h);
  const PointSet& ps = h.points();
  EdgeColoring c;
  c.color.assign(h.num_edges(), EdgeColor::Blue);
  c.blue_degree.assign(h.num_vertices(), 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    c.groups[{e[0], e[1]}].push_back(i);
    c.groups[{e[0], e[2]}].push_back(i);
    c.groups[{e[1], e[2]}].push_back(i);
  }
  auto third = [&](std::size_t i, const VertexPair& uv) {
    for (auto x : h.edge(i).v)
      if (x != uv.first && x != uv.second) return x;
    return h.edge(i)[0];
  };
  for (const auto& [uv, members] : c.groups) {
    for (auto t : members) {
      Plane3 plane = Plane3::through(ps.p3(uv.first), ps.p3(uv.second), ps.p3(third(t, uv)));
      bool pos = false, neg = false;
      for (auto o : members) {
        int s = plane.eval(ps.p3(third(o, uv))).sign();
        pos |= s > 0;
        neg |= s < 0;
      }
      if (!(pos && neg)) {
        c.red_in[uv].push_back(t);
        c.color[t] = EdgeColor::Red;
      }
    }
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (c.color[i] == EdgeColor::Red) {
      ++c.red_count;
      continue;
    }
    ++c.blue_count;
    for (auto x : h.edge(i).v) ++c.blue_degree[x];
  }
  return c;
}

// ---------------------------------------------------------------------------
// Sphere link at a vertex

struct SphereArc {
  std::size_t a;     // direction index
  std::size_t b;     // direction index
  std::size_t edge;  // originating hyperedge {v, neighbors[a], neighbors[b]}
};

/// Link of a vertex on a small sphere, as unnormalized direction vectors.
struct SphereGraph {
  VertexId center;
  std::vector<VertexId> neighbors;
  std::vector<Vec3> directions;
  std::vector<SphereArc> arcs;

  std::size_t num_vertices() const { return directions.size(); }
  std::size_t num_arcs() const { return arcs.size(); }
};

inline SphereGraph build_sphere_link(const GeometricHypergraph& h, VertexId v, std::span<const std::size_t> edges) {
  detail::require_space_triangles(h);
  const PointSet& ps = h.points();
  SphereGraph g;
  g.center = v;
  std::map<VertexId, std::size_t> index;
  auto dir_of = [&](VertexId w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    std::size_t id = g.neighbors.size();
    g.neighbors.push_back(w);
    g.directions.push_back(ps.p3(w) - ps.p3(v));
    index.emplace(w, id);
    return id;
  };
  for (auto e : edges) {
    const auto& s = h.edge(e);
    if (!s.contains(v)) throw Error(Errc::PreconditionUnmet, "edge does not contain the link center");
    std::vector<VertexId> others;
    for (auto x : s.v)
      if (x != v) others.push_back(x);
    std::size_t a = dir_of(others[0]), b = dir_of(others[1]);
    g.arcs.push_back({a, b, e});
  }
  const auto& d = g.directions;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) throw Error(Errc::GeneralPositionViolation, "zero direction");
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (cross(d[i], d[j]).is_zero()) throw Error(Errc::GeneralPositionViolation, "parallel directions");
      for (std::size_t k = j + 1; k < d.size(); ++k)
        if (dot(d[i], cross(d[j], d[k])).sign() == 0)
          throw Error(Errc::GeneralPositionViolation, "three directions on a great circle");
    }
  }
  return g;
}

inline SphereGraph build_sphere_link(const GeometricHypergraph& h, const EdgeColoring& c, VertexId v) {
  std::vector<std::size_t> blue;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (c.color[i] == EdgeColor::Blue && h.edge(i).contains(v)) blue.push_back(i);
  return build_sphere_link(h, v, blue);
}

/// Each arc lies strictly on one side of the other's great circle.
inline bool arcs_avoiding(const Vec3& u1, const Vec3& w1, const Vec3& u2, const Vec3& w2) {
  Vec3 n1 = cross(u1, w1), n2 = cross(u2, w2);
  int s1 = dot(n1, u2).sign(), s2 = dot(n1, w2).sign();
  int s3 = dot(n2, u1).sign(), s4 = dot(n2, w1).sign();
  return s1 != 0 && s1 == s2 && s3 != 0 && s3 == s4;
}

inline bool arcs_avoiding(const SphereGraph& g, std::size_t i, std::size_t j) {
  const auto& a = g.arcs[i];
  const auto& b = g.arcs[j];
  return arcs_avoiding(g.directions[a.a], g.directions[a.b], g.directions[b.a], g.directions[b.b]);
}

inline std::optional<std::pair<std::size_t, std::size_t>> find_avoiding_pair(const SphereGraph& g) {
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < g.arcs.size(); ++j)
      if (arcs_avoiding(g, i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Disjoint pair from two avoiding arcs

struct DisjointPairExtraction {
  std::size_t blue_edge;  // conv(x ∪ y ∪ v)
  std::size_t red_edge;   // conv(w ∪ z ∪ p)
  VertexPair xy;
  VertexPair wz;
  VertexId p;
};

/// Given avoiding arcs (x, y) and (w, z) at v, returns conv(x ∪ y ∪ v) and a
/// red edge of E_wz strictly across the plane of conv(w ∪ z ∪ v).
inline DisjointPairExtraction extract_disjoint_pair(const GeometricHypergraph& h, const EdgeColoring& c,
                                                    const SphereGraph& g, std::size_t arc_xy, std::size_t arc_wz) {
  detail::require_space_triangles(h);
  const PointSet& ps = h.points();
  if (!arcs_avoiding(g, arc_xy, arc_wz)) throw Error(Errc::PreconditionUnmet, "arcs are not avoiding");
  const VertexId v = g.center;
  const auto& axy = g.arcs[arc_xy];
  const auto& awz = g.arcs[arc_wz];
  if (c.color[axy.edge] != EdgeColor::Blue || c.color[awz.edge] != EdgeColor::Blue)
    throw Error(Errc::PreconditionUnmet, "arcs must come from blue edges");
  VertexId x = g.neighbors[axy.a], y = g.neighbors[axy.b];
  VertexId w = g.neighbors[awz.a], z = g.neighbors[awz.b];

  Plane3 plane = Plane3::through(ps.p3(w), ps.p3(z), ps.p3(v));
  int xy_side = plane.eval(ps.p3(x)).sign();
  if (xy_side == 0 || plane.eval(ps.p3(y)).sign() != xy_side)
    throw Error(Errc::PreconditionUnmet, "blue edge xyv is not on one side of the plane of wzv");

  VertexPair wz = detail::canonical({w, z});
  auto it = c.red_in.find(wz);
  if (it == c.red_in.end()) throw Error(Errc::NoSeparatingRed, "group E_wz has no red edge");
  std::vector<std::size_t> reds = it->second;
  std::sort(reds.begin(), reds.end(), [&](std::size_t a, std::size_t b) { return h.edge(a) < h.edge(b); });
  bool collided = false;
  for (auto r : reds) {
    VertexId p = 0;
    for (auto q : h.edge(r).v)
      if (q != w && q != z) p = q;
    if (plane.eval(ps.p3(p)).sign() != -xy_side) continue;
    if (p == x || p == y || p == v) {
      collided = true;
      continue;
    }
    std::size_t blue = axy.edge;
    if (!triangles_disjoint_3d(h.triangle3(blue), h.triangle3(r)))
      throw Error(Errc::CaseFallthrough, "separated edges intersect");
    return {blue, r, detail::canonical({x, y}), wz, p};
  }
  if (collided) throw Error(Errc::SharedVertex, "separating red edge shares a vertex");
  throw Error(Errc::NoSeparatingRed, "no red edge of E_wz strictly across the plane");
}

/// Full route: color, pick vertices by decreasing blue degree, and try every
/// avoiding arc pair in both roles until a disjoint pair is extracted.
struct DisjointPipelineResult {
  EdgeColoring coloring;
  VertexId center = 0;
  std::size_t sphere_vertices = 0;
  std::size_t sphere_arcs = 0;
  std::optional<std::pair<std::size_t, std::size_t>> avoiding;  // arc indices at `center`
  std::optional<DisjointPairExtraction> pair;
  std::string failure;  // reason when no pair was extracted
};

inline DisjointPipelineResult disjoint_pair_pipeline(const GeometricHypergraph& h) {
  DisjointPipelineResult out;
  out.coloring = red_blue_color(h);
  std::vector<VertexId> order(h.num_vertices());
  for (VertexId i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return out.coloring.blue_degree[a] > out.coloring.blue_degree[b];
  });
  out.failure = "no avoiding arc pair in any vertex link";
  bool first = true;
  for (VertexId v : order) {
    if (out.coloring.blue_degree[v] < 2) break;
    SphereGraph g = build_sphere_link(h, out.coloring, v);
    if (first) {
      out.center = v;
      out.sphere_vertices = g.num_vertices();
      out.sphere_arcs = g.num_arcs();
      first = false;
    }
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
      for (std::size_t j = i + 1; j < g.arcs.size(); ++j) {
        if (!arcs_avoiding(g, i, j)) continue;
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          try {
            out.pair = extract_disjoint_pair(h, out.coloring, g, a, b);
            out.center = v;
            out.sphere_vertices = g.num_vertices();
            out.sphere_arcs = g.num_arcs();
            out.avoiding = std::make_pair(a, b);
            out.failure.clear();
            return out;
          } catch (const Error& e) {
            if (e.code() != Errc::NoSeparatingRed && e.code() != Errc::SharedVertex) throw;
            out.failure = e.what();
          }
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Locating configurations inside arbitrary hypergraphs

struct FourCrossingSite {
  VertexId v;
  std::array<VertexPair, 4> bases;
};

/// First apex v and four pairwise crossing bases of its above-link whose
/// extraction succeeds.
inline std::optional<std::pair<FourCrossingSite, FourCrossingExtraction>> locate_four_crossing(
    const GeometricHypergraph& h, std::size_t min_apexes = kDefaultMinApexes) {
  detail::require_plane_triangles(h);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    LinkGraph g = link_graph(h, v, true);
    std::vector<VertexPair> eligible;
    for (auto b : g.bases)
      if (base_group_apexes(h, b).size() >= min_apexes) eligible.push_back(b);
    std::vector<Segment2> segs;
    for (auto b : eligible) segs.push_back(detail::base_segment(h.points(), b));
    const std::size_t m = segs.size();
    std::vector<std::vector<char>> cr(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) cr[i][j] = cr[j][i] = segments_cross_disjoint(segs[i], segs[j]);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        if (!cr[a][b]) continue;
        for (std::size_t c = b + 1; c < m; ++c) {
          if (!cr[a][c] || !cr[b][c]) continue;
          for (std::size_t d = c + 1; d < m; ++d) {
            if (!cr[a][d] || !cr[b][d] || !cr[c][d]) continue;
            FourCrossingSite site{v, {eligible[a], eligible[b], eligible[c], eligible[d]}};
            try {
              auto ex = extract_sc3_from_four_crossing(h, v, site.bases, min_apexes);
              return std::make_pair(site, ex);
            } catch (const Error& e) {
              if (e.code() != Errc::PreconditionUnmet) throw;
            }
          }
        }
      }
  }
  return std::nullopt;
}

struct GreedySite {
  std::vector<VertexPair> bases;
  std::vector<VertexId> apexes;
};

/// First k pairwise crossing bases sharing k common apexes lying above all
/// of them.
inline std::optional<GreedySite> locate_greedy_site(const GeometricHypergraph& h, int k) {
  detail::require_plane_triangles(h);
  std::vector<VertexPair> bases;
  std::vector<std::vector<VertexId>> above;
  for (const auto& grp : group_by_base(h)) {
    std::vector<VertexId> a;
    for (auto e : grp.edges) {
      auto d = classify_base(h.points(), h.edge(e));
      if (d.position == ApexPosition::Above) a.push_back(d.apex);
    }
    std::sort(a.begin(), a.end());
    if (static_cast<int>(a.size()) >= k) {
      bases.push_back(grp.base);
      above.push_back(std::move(a));
    }
  }
  std::vector<Segment2> segs;
  for (auto b : bases) segs.push_back(detail::base_segment(h.points(), b));
  std::vector<std::size_t> chosen;
  std::optional<GreedySite> out;
  std::function<bool(std::size_t, std::vector<VertexId>)> rec = [&](std::size_t start,
                                                                    std::vector<VertexId> common) -> bool {
    if (static_cast<int>(common.size()) < k) return false;
    if (static_cast<int>(chosen.size()) == k) {
      GreedySite s;
      for (auto i : chosen) s.bases.push_back(bases[i]);
      s.apexes.assign(common.begin(), common.begin() + k);
      out = s;
      return true;
    }
    for (std::size_t i = start; i < bases.size(); ++i) {
      bool ok = true;
      for (auto c : chosen)
        if (!segments_cross_disjoint(segs[c], segs[i])) { ok = false; break; }
      if (!ok) continue;
      std::vector<VertexId> next;
      std::set_intersection(common.begin(), common.end(), above[i].begin(), above[i].end(), std::back_inserter(next));
      chosen.push_back(i);
      if (rec(i + 1, std::move(next))) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<VertexId> all(h.num_vertices());
  for (VertexId i = 0; i < all.size(); ++i) all[i] = i;
  rec(0, all);
  return out;
}

}  // namespace geohyper
