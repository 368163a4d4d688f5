#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace geohyper;
using support::P;

TEST(GeneralPosition, Plane) {
  std::vector<Point2> ok{P(0, 0), P(1, 0), P(2, 1)};
  EXPECT_FALSE(validate_general_position(std::span<const Point2>(ok)));

  std::vector<Point2> eqx{P(0, 0), P(0, 1), P(1, 2)};
  auto v = validate_general_position(std::span<const Point2>(eqx));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::EqualX);
  EXPECT_EQ(v->indices, (std::vector<VertexId>{0, 1}));

  std::vector<Point2> col{P(0, 0), P(1, 1), P(2, 2)};
  v = validate_general_position(std::span<const Point2>(col));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Collinear);
  EXPECT_THROW(PointSet{col}, Error);
}

TEST(GeneralPosition, Space) {
  std::vector<Point3> cop{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(2, 3, 0), P(5, 1, 7)};
  auto v = validate_general_position(std::span<const Point3>(cop));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Coplanar);
  EXPECT_EQ(v->indices, (std::vector<VertexId>{0, 1, 2, 3}));

  std::vector<Point3> eqxy{P(0, 0, 0), P(0, 0, 1)};
  v = validate_general_position(std::span<const Point3>(eqxy));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::EqualXY);
}

TEST(Hypergraph, RejectsBadInput) {
  PointSet ps(std::vector<Point2>{P(0, 0), P(1, 5), P(2, 1), P(3, 7)});
  EXPECT_THROW(GeometricHypergraph(ps, 4), Error);
  EXPECT_THROW(GeometricHypergraph(ps, 3, {Simplex{0, 1, 2}, Simplex{2, 1, 0}}), Error);
  EXPECT_THROW(GeometricHypergraph(ps, 3, {Simplex{0, 1, 9}}), Error);
  EXPECT_THROW(GeometricHypergraph(ps, 3, {Simplex{0, 1}}), Error);
  GeometricHypergraph h(ps, 3, {Simplex{0, 1, 2}});
  EXPECT_EQ(h.num_edges(), 1u);
}

TEST(ClassifyBase, Examples) {
  PointSet ps(std::vector<Point2>{P(0, 0), P(10, 1), P(4, 8)});
  auto d = classify_base(ps, Simplex{0, 1, 2});
  EXPECT_EQ(d.base, (VertexPair{0, 1}));
  EXPECT_EQ(d.apex, 2u);
  EXPECT_EQ(d.position, ApexPosition::Above);
  EXPECT_EQ(d.left, (VertexPair{0, 2}));
  EXPECT_EQ(d.right, (VertexPair{2, 1}));

  PointSet below(std::vector<Point2>{P(0, 0), P(10, 1), P(4, -8)});
  d = classify_base(below, Simplex{0, 1, 2});
  EXPECT_EQ(d.base, (VertexPair{0, 1}));
  EXPECT_EQ(d.position, ApexPosition::Below);
}

TEST(ClassifyBase, RandomTrianglesHaveStrictlyLongestBase) {
  PointSet ps = generate_random(2, 14, 3, 1000);
  auto h = complete_hypergraph(ps, 3);
  for (const auto& e : h.edges()) {
    auto d = classify_base(ps, e);
    auto dx = [&](VertexId a, VertexId b) { return abs(ps.p2(a).x - ps.p2(b).x); };
    Rational base = dx(d.base.first, d.base.second);
    EXPECT_GT(base, dx(d.left.first, d.left.second));
    EXPECT_GT(base, dx(d.right.first, d.right.second));
    EXPECT_LT(ps.p2(d.base.first).x, ps.p2(d.apex).x);
    EXPECT_LT(ps.p2(d.apex).x, ps.p2(d.base.second).x);
    int o = static_cast<int>(orient2(ps.p2(d.base.first), ps.p2(d.base.second), ps.p2(d.apex)));
    EXPECT_EQ(o > 0, d.position == ApexPosition::Above);
  }
}

TEST(GroupByBase, SharedBase) {
  PointSet ps(std::vector<Point2>{P(0, 0), P(10, 0), P(1, 1), P(2, 3), P(3, 4)});
  GeometricHypergraph h(ps, 3, {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 1, 4}});
  auto groups = group_by_base(h);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].base, (VertexPair{0, 1}));
  EXPECT_EQ(groups[0].edges.size(), 3u);
}

TEST(GroupByBase, Partition) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto h = complete_hypergraph(generate_random(2, 9, seed, 1000), 3);
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const auto& g : group_by_base(h)) {
      EXPECT_LT(g.base.first, g.base.second);
      for (auto e : g.edges) {
        EXPECT_TRUE(seen.insert(e).second);
        auto d = classify_base(h.points(), h.edge(e));
        EXPECT_EQ(std::minmax(d.base.first, d.base.second), std::minmax(g.base.first, g.base.second));
      }
      total += g.edges.size();
    }
    EXPECT_EQ(total, h.num_edges());
  }
}

TEST(GroupByBase, AllDistinctBases) {
  PointSet ps(std::vector<Point2>{P(0, 0), P(10, 1), P(4, 8), P(20, 3), P(14, -9), P(30, 2)});
  GeometricHypergraph h(ps, 3, {Simplex{0, 1, 2}, Simplex{3, 4, 5}});
  EXPECT_EQ(group_by_base(h).size(), h.num_edges());
}

TEST(LinkGraph, StarAndEmpty) {
  PointSet ps = generate_random(2, 8, 4, 1000);
  auto star = star_construction(ps, 0, 3);
  auto g = link_graph(star, 0);
  std::size_t expected = 0;
  for (const auto& e : star.edges())
    if (classify_base(ps, e).apex == 0) ++expected;
  EXPECT_EQ(g.bases.size(), expected);
  for (std::size_t i = 0; i < g.bases.size(); ++i) {
    auto d = classify_base(ps, star.edge(g.edges[i]));
    EXPECT_EQ(d.apex, 0u);
    EXPECT_EQ(std::minmax(d.base.first, d.base.second), std::minmax(g.bases[i].first, g.bases[i].second));
  }
  GeometricHypergraph h(ps, 3, {Simplex{1, 2, 3}});
  EXPECT_TRUE(link_graph(h, 0).bases.empty());
}

TEST(LinkGraph, SumOverApexesCountsEachEdgeOnce) {
  auto h = complete_hypergraph(generate_random(2, 9, 6, 1000), 3);
  std::size_t sum = 0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) sum += link_graph(h, v).bases.size();
  EXPECT_EQ(sum, h.num_edges());
  std::size_t above = 0, recount = 0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) above += link_graph(h, v, true).bases.size();
  for (const auto& e : h.edges())
    if (classify_base(h.points(), e).position == ApexPosition::Above) ++recount;
  EXPECT_EQ(above, recount);
}

TEST(Star, Counts) {
  EXPECT_EQ(star_construction(generate_random(2, 5, 1), 0, 3).num_edges(), 6u);
  EXPECT_EQ(star_construction(generate_random(2, 10, 1), 0, 3).num_edges(), 36u);
  auto s = star_construction(generate_random(3, 9, 2), 4, 3);
  EXPECT_EQ(s.num_edges(), 28u);
  for (const auto& a : s.edges()) {
    EXPECT_TRUE(a.contains(4));
    for (const auto& b : s.edges()) EXPECT_FALSE(a.disjoint(b));
  }
}

TEST(Generators, Deterministic) {
  auto a = to_json(generate_random(2, 50, 9)).dump();
  auto b = to_json(generate_random(2, 50, 9)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, to_json(generate_random(2, 50, 10)).dump());
  EXPECT_EQ(to_json(generate_convex(12, 3)).dump(), to_json(generate_convex(12, 3)).dump());
}

TEST(Generators, SpaceGeneralPosition) {
  PointSet ps = generate_random(3, 20, 5);
  EXPECT_EQ(ps.size(), 20u);
  EXPECT_FALSE(validate_general_position(std::span<const Point3>(ps.points3())));
}

TEST(Generators, ConvexIsClockwiseHull) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::size_t n = 4 + seed % 9;
    PointSet ps = generate_convex(n, seed);
    const auto& p = ps.points2();
    ASSERT_EQ(p.size(), n);
    EXPECT_TRUE(is_convex_clockwise(p));
    // Independent check: every point is a hull vertex and the hull order is
    // the stored order reversed (oracle hull is counter-clockwise).
    auto hull = oracle::convex_hull(p);
    EXPECT_EQ(hull.size(), n);
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_EQ(oracle::cross_z(p[i], p[(i + 1) % n], p[(i + 2) % n]).sign(), -1);
  }
}

TEST(Json, RoundTrip) {
  auto h = star_construction(generate_random(2, 7, 8), 2, 3);
  Json j = to_json(h);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_TRUE(j["points"][0][0].is_string());
  auto back = hypergraph_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"dimension": 2, "points": [["1/0", "1"]]})")), Error);
  EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"dimension": 4, "points": []})")), Error);
}
