#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace geohyper;
using support::P;
using support::R;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(R(2, 4), R(1, 2));
  EXPECT_EQ(R(3, -6).to_string(), "-1/2");
  EXPECT_EQ(R(5).to_string(), "5/1");
  EXPECT_EQ(R(5).to_short_string(), "5");
  EXPECT_EQ(Rational::parse("10/4"), R(5, 2));
  EXPECT_EQ(Rational::parse("-7"), R(-7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(R(1) / R(0), Error);
}

TEST(Orient2, Examples) {
  EXPECT_EQ(orient2(P(0, 0), P(1, 0), P(0, 1)), Orientation::CCW);
  EXPECT_EQ(orient2(P(0, 0), P(1, 1), P(2, 2)), Orientation::Collinear);
  EXPECT_EQ(orient2(P(0, 0), P(0, 1), P(1, 0)), Orientation::CW);
}

TEST(Orient2, Antisymmetry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Point2 p = oracle::random_point2(rng, 5), q = oracle::random_point2(rng, 5), r = oracle::random_point2(rng, 5);
    EXPECT_EQ(static_cast<int>(orient2(p, q, r)), -static_cast<int>(orient2(q, p, r)));
  }
}

TEST(Orient3, Examples) {
  EXPECT_EQ(orient3(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)), Orientation3::Positive);
  EXPECT_EQ(orient3(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(3, 7, 0)), Orientation3::Coplanar);
  EXPECT_EQ(orient3(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, -1)), Orientation3::Negative);
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}));
  EXPECT_FALSE(segments_cross({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}));
  EXPECT_TRUE(segments_cross({P(0, 0), P(4, 0)}, {P(1, -1), P(1, 1)}));
}

TEST(SegmentsCross, SharedEndpointIsAnError) {
  try {
    segments_cross({P(0, 0), P(1, 1)}, {P(1, 1), P(2, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SharedEndpoint);
  }
}

TEST(SegmentsCross, Symmetric) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 3000; ++i) {
    Point2 a = oracle::random_point2(rng, 4), b = oracle::random_point2(rng, 4);
    Point2 c = oracle::random_point2(rng, 4), d = oracle::random_point2(rng, 4);
    if (a == b || c == d || a == c || a == d || b == c || b == d) continue;
    Segment2 s{a, b}, t{c, d};
    bool st = segments_cross(s, t);
    EXPECT_EQ(st, segments_cross(t, s));
    EXPECT_EQ(st, oracle::closed_segments_meet(a, b, c, d));
  }
}

TEST(SegmentIntersectionPoint, Examples) {
  EXPECT_EQ(segment_intersection_point({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}), P(1, 1));
  EXPECT_EQ(segment_intersection_point({P(0, 0), P(4, 0)}, {P(1, -1), P(1, 1)}), P(1, 0));
  EXPECT_EQ(segment_intersection_point({P(0, 0), P(3, 3)}, {P(0, 3), P(3, 0)}), (Point2{R(3, 2), R(3, 2)}));
}

TEST(SegmentIntersectionPoint, Errors) {
  try {
    segment_intersection_point({P(0, 0), P(1, 0)}, {P(2, 1), P(3, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoIntersection);
  }
  try {
    segment_intersection_point({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParallelOverlap);
  }
}

TEST(TriangleContains, ClosedSemantics) {
  Triangle2 t{P(0, 0), P(4, 0), P(0, 4)};
  EXPECT_TRUE(triangle_contains_2d(t, P(1, 1)));
  EXPECT_TRUE(triangle_contains_2d(t, P(2, 2)));
  EXPECT_FALSE(triangle_contains_2d(t, P(5, 5)));
  EXPECT_TRUE(triangle_contains_2d(t, P(0, 0)));
  Triangle2 flat{P(0, 0), P(1, 1), P(2, 2)};
  try {
    triangle_contains_2d(flat, P(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateTriangle);
  }
}

TEST(Clip, IdentityAndEmpty) {
  Polygon2 square{P(0, 0), P(1, 0), P(1, 1), P(0, 1)};
  EXPECT_EQ(clip_convex_by_triangle(square, {P(-10, -10), P(30, -10), P(-10, 30)}), square);
  EXPECT_TRUE(clip_convex_by_triangle(square, {P(5, 5), P(6, 5), P(5, 6)}).empty());
}

TEST(Clip, QuadrilateralAreaMatchesHalfPlaneOracle) {
  Polygon2 square{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  Triangle2 t{P(1, -1), P(3, 1), P(1, 3)};
  Polygon2 out = clip_convex_by_triangle(square, t);
  EXPECT_EQ(out.size(), 4u);

  std::vector<oracle::HLine> hs;
  for (std::size_t i = 0; i < 4; ++i) hs.push_back(oracle::inner_halfplane(square[i], square[(i + 1) % 4]));
  Triangle2 c = ccw(t);
  for (int i = 0; i < 3; ++i) hs.push_back(oracle::inner_halfplane(c[i], c[(i + 1) % 3]));
  auto ref = oracle::halfplane_intersection(hs);
  EXPECT_EQ(oracle::twice_area(out), oracle::twice_area(ref));
  EXPECT_EQ(oracle::twice_area(out), R(4));  // the rectangle [1,2] x [0,2]
}

TEST(Clip, RandomAreasAndSubset) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 800; ++it) {
    auto a = oracle::random_triangle2(rng, 12), b = oracle::random_triangle2(rng, 12);
    Polygon2 out = clip_convex_by_triangle(to_polygon(a), b);
    for (const auto& p : out) {
      EXPECT_TRUE(triangle_contains_2d(a, p));
      EXPECT_TRUE(triangle_contains_2d(b, p));
    }
    std::vector<oracle::HLine> hs;
    for (const auto& t : {ccw(a), ccw(b)})
      for (int i = 0; i < 3; ++i) hs.push_back(oracle::inner_halfplane(t[i], t[(i + 1) % 3]));
    auto ref = oracle::halfplane_intersection(hs);
    Rational area = out.size() >= 3 ? oracle::twice_area(out) : R(0);
    Rational ref_area = ref.size() >= 3 ? oracle::twice_area(ref) : R(0);
    EXPECT_EQ(area, ref_area);
    EXPECT_EQ(!out.empty(), oracle::common_point_by_arrangement({a, b}));
    // Output is counter-clockwise and duplicate-free.
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) EXPECT_FALSE(out[i] == out[j]);
    if (out.size() >= 3) {
      EXPECT_GT(oracle::twice_area(out).sign(), 0);
    }
  }
}

TEST(TrianglesDisjoint3d, Examples) {
  Triangle3 a{P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)};
  Triangle3 b{P(0, 0, 1), P(4, 0, 1), P(0, 4, 1)};
  EXPECT_TRUE(triangles_disjoint_3d(a, b));
  Triangle3 big{P(-10, -10, 0), P(10, -10, 0), P(0, 10, 0)};
  Triangle3 stab{P(0, 0, -1), P(1, 0, 1), P(0, 1, 1)};
  EXPECT_FALSE(triangles_disjoint_3d(big, stab));
  // Coplanar overlap and coplanar separation.
  EXPECT_FALSE(triangles_disjoint_3d(a, {P(1, 1, 0), P(5, 1, 0), P(1, 5, 0)}));
  EXPECT_TRUE(triangles_disjoint_3d(a, {P(5, 5, 0), P(9, 5, 0), P(5, 9, 0)}));
}

TEST(TrianglesDisjoint3d, AgreesWithSegmentTriangleOracle) {
  std::mt19937_64 rng(14);
  int disjoint = 0, meeting = 0;
  for (int it = 0; it < 10000; ++it) {
    long bound = it % 3 == 0 ? 3 : 20;
    auto a = oracle::random_triangle3(rng, bound), b = oracle::random_triangle3(rng, bound);
    if (it % 7 == 0) {
      // Force coplanar pairs through z = 0.
      for (auto& p : a) p.z = R(0);
      for (auto& p : b) p.z = R(0);
      if (cross(a[1] - a[0], a[2] - a[0]).is_zero() || cross(b[1] - b[0], b[2] - b[0]).is_zero()) continue;
    }
    bool expected = !oracle::triangles_meet_3d(a, b);
    ASSERT_EQ(triangles_disjoint_3d(a, b), expected) << "iteration " << it;
    (expected ? disjoint : meeting)++;
  }
  EXPECT_GT(disjoint, 100);
  EXPECT_GT(meeting, 100);
}

TEST(PlaneSide, Examples) {
  Plane3 z0 = Plane3::through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0));
  EXPECT_EQ(plane_side(z0, P(0, 0, 1)), PlaneSide::Above);
  EXPECT_EQ(plane_side(z0, P(1, 2, 0)), PlaneSide::On);
  EXPECT_EQ(plane_side(z0, P(0, 0, -3)), PlaneSide::Below);
}

TEST(Predicates, Deterministic) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 200; ++it) {
    auto a = oracle::random_triangle3(rng, 10), b = oracle::random_triangle3(rng, 10);
    EXPECT_EQ(triangles_disjoint_3d(a, b), triangles_disjoint_3d(a, b));
    auto s = oracle::random_triangle2(rng, 10), t = oracle::random_triangle2(rng, 10);
    EXPECT_EQ(clip_convex_by_triangle(to_polygon(s), t), clip_convex_by_triangle(to_polygon(s), t));
  }
}
