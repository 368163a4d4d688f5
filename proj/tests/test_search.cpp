#include <gtest/gtest.h>

#include <random>

#include "bound_oracle.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geohyper;
using support::R;

namespace {

const PatternSpec kSC2(PatternKind::StronglyCrossing, 2);
const PatternSpec kSC3(PatternKind::StronglyCrossing, 3);
const PatternSpec kD2(PatternKind::PairwiseDisjoint, 2);

void expect_close(const std::string& decimal, double want) {
  double got = std::stod(decimal);
  if (want == 0) EXPECT_EQ(got, 0);
  else EXPECT_LT(std::abs(got - want) / std::abs(want), 1e-12) << decimal << " vs " << want;
}

}  // namespace

TEST(Conflicts, TooFewVerticesMeansNone) {
  EXPECT_TRUE(enumerate_conflicts(generate_random(2, 5, 1), kSC2).tuples.empty());
  EXPECT_TRUE(enumerate_conflicts(generate_random(2, 8, 1), kSC3).tuples.empty());
  EXPECT_TRUE(enumerate_conflicts(generate_random(3, 5, 1), kD2).tuples.empty());
}

TEST(Conflicts, SixPointRecount) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto ps = generate_random(2, 6, seed, 40);
    auto cs = enumerate_conflicts(ps, kSC2);
    auto full = complete_hypergraph(ps, 3);
    std::size_t want = 0;
    for (std::size_t i = 0; i < full.num_edges(); ++i)
      for (std::size_t j = i + 1; j < full.num_edges(); ++j)
        if (full.edge(i).disjoint(full.edge(j)) &&
            oracle::common_point_by_arrangement({full.triangle2(i), full.triangle2(j)}))
          ++want;
    EXPECT_EQ(cs.tuples.size(), want);
    for (const auto& t : cs.tuples) {
      ASSERT_EQ(t.size(), 2u);
      EXPECT_TRUE(cs.candidates[t[0]].disjoint(cs.candidates[t[1]]));
    }
  }
}

TEST(Conflicts, DimensionMismatch) {
  EXPECT_THROW(enumerate_conflicts(generate_random(3, 6, 1), kSC2), Error);
  EXPECT_THROW(enumerate_conflicts(generate_random(2, 6, 1), kD2), Error);
}

TEST(Extremal, TrivialValues) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_EQ(extremal_exact(generate_random(2, 5, seed), kSC2).count, 10u);
    EXPECT_EQ(extremal_exact(generate_random(3, 5, seed), kD2).count, 10u);
    EXPECT_EQ(extremal_exact(generate_random(2, 8, seed), kSC3).count, 56u);
    EXPECT_EQ(extremal_exact(generate_random(2, 6, seed), kSC3).count, 20u);
  }
}

TEST(Extremal, FrozenSevenPointValue) {
  auto ps = generate_random(2, 7, 1);
  auto r = extremal_exact(ps, kSC2);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.count, 23u);
  EXPECT_EQ(static_cast<int>(r.count), oracle::sc2_extremal(ps));
  EXPECT_TRUE(pattern_free(ps, kSC2, r.edges));
}

TEST(Extremal, MatchesIndependentSetOracle) {
  for (std::uint64_t seed = 2; seed <= 7; ++seed) {
    auto ps = generate_random(2, 7, seed, 60);
    auto r = extremal_exact(ps, kSC2);
    EXPECT_EQ(static_cast<int>(r.count), oracle::sc2_extremal(ps)) << "seed " << seed;
    EXPECT_TRUE(pattern_free(ps, kSC2, r.edges));
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto ps = generate_random(3, 7, seed, 60);
    auto r = extremal_exact(ps, kD2);
    EXPECT_EQ(static_cast<int>(r.count), oracle::d2_extremal(ps)) << "seed " << seed;
    EXPECT_TRUE(pattern_free(ps, kD2, r.edges));
  }
}

TEST(Extremal, BruteForceOnTwentyCandidates) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto cs = enumerate_conflicts(generate_random(2, 6, seed, 30), kSC2);
    ASSERT_EQ(cs.candidates.size(), 20u);
    EXPECT_EQ(static_cast<int>(extremal_exact(cs).count), oracle::max_free_subset(20, cs.tuples));
  }
  std::mt19937_64 rng(51);
  auto pool = complete_hypergraph(generate_random(2, 7, 1), 3).edges();
  for (int it = 0; it < 40; ++it) {
    std::size_t m = 12 + it % 7;
    ConflictSet cs{PatternSpec(PatternKind::StronglyCrossing, 3), {pool.begin(), pool.begin() + m}, {}};
    std::size_t count = 5 + rng() % 30;
    for (std::size_t t = 0; t < count; ++t) {
      std::set<std::size_t> tuple;
      while (tuple.size() < 3) tuple.insert(rng() % m);
      cs.tuples.emplace_back(tuple.begin(), tuple.end());
    }
    EXPECT_EQ(static_cast<int>(extremal_exact(cs).count), oracle::max_free_subset(m, cs.tuples));
  }
}

TEST(Extremal, Sandwich) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto ps = generate_random(2, 8, seed);
    auto star = star_edges(ps).size();
    auto greedy = extremal_greedy(ps, kSC2, seed);
    auto exact = extremal_exact(ps, kSC2);
    EXPECT_EQ(star, 21u);
    EXPECT_LE(star, greedy.count);
    EXPECT_LE(greedy.count, exact.count);
    EXPECT_LE(exact.count, 56u);
    EXPECT_TRUE(pattern_free(ps, kSC2, greedy.edges));
  }
}

TEST(Extremal, GreedyDeterministic) {
  auto ps = generate_random(2, 9, 4);
  auto a = extremal_greedy(ps, kSC3, 17);
  auto b = extremal_greedy(ps, kSC3, 17);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_TRUE(pattern_free(ps, kSC3, a.edges));
  auto d = extremal_greedy(generate_random(3, 8, 4), kD2, 3);
  EXPECT_GE(d.count, 21u);
  EXPECT_TRUE(pattern_free(generate_random(3, 8, 4), kD2, d.edges));
}

TEST(Extremal, MonotoneUnderVertexDeletion) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto ps = generate_random(2, 7, seed);
    std::vector<VertexId> keep{0, 1, 2, 3, 4, 5};
    auto sub = ps.subset(keep);
    EXPECT_LE(extremal_exact(sub, kSC2).count, extremal_exact(ps, kSC2).count);
  }
}

TEST(Extremal, BudgetExceeded) {
  try {
    extremal_exact(generate_random(2, 8, 1), kSC2, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Bounds, Exponents) {
  EXPECT_EQ(*bound_tverberg(2, 2, 10).exponent, R(26, 9));
  EXPECT_EQ(*bound_tverberg(2, 3, 10).exponent, R(74, 25));
  EXPECT_EQ(*bound_tverberg(1, 2, 10).exponent, R(5, 3));
  EXPECT_EQ(*bound_akiyama_alon(3, 2, 10).exponent, R(11, 4));
  EXPECT_EQ(*bound_akiyama_alon(2, 2, 10).exponent, R(3, 2));
  EXPECT_EQ(*bound_akiyama_alon(1, 5, 10).exponent, R(0));
  EXPECT_EQ(bound_akiyama_alon(1, 5, 10).decimal, "1");
  EXPECT_EQ(bound_tverberg(2, 2, 1).decimal, "1");
  EXPECT_THROW(bound_tverberg(0, 2, 10), Error);
  EXPECT_THROW(bound_akiyama_alon(2, 1, 10), Error);
}

TEST(Bounds, KstSpecialCases) {
  auto b = bound_kst(10, 20, 1, 1);
  ASSERT_TRUE(b.exact_value);
  EXPECT_EQ(*b.exact_value, R(0));
  EXPECT_EQ(b.decimal, "0");
  auto c = bound_kst(7, 9, 1, 4);
  EXPECT_EQ(*c.exact_value, R(21));
  EXPECT_EQ(c.decimal, "21");
  auto d = bound_kst(16, 16, 2, 2);
  EXPECT_EQ(d.decimal, "80");
  expect_close(d.decimal, oracle::mpfr_kst(16, 16, 2, 2));
  EXPECT_THROW(bound_kst(0, 5, 2, 2), Error);
}

TEST(Bounds, StrongCrossingSubstitution) {
  auto b = bound_kst_strong_crossing(10, 3);
  EXPECT_TRUE(b.constant_unspecified);
  EXPECT_EQ(b.parameters.at("c_k"), "1");
  EXPECT_EQ(*b.exponent, R(8, 3));
  expect_close(b.decimal, oracle::mpfr_kst(10, 100, 3, 10));
  auto c = bound_kst_strong_crossing(10, 3, R(2));
  EXPECT_FALSE(c.constant_unspecified);
  expect_close(c.decimal, oracle::mpfr_kst(10, 100, 3, 20));
}

TEST(Bounds, MatchHighPrecisionOracle) {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 20; ++it) {
    int d = 1 + static_cast<int>(rng() % 4);
    int k = 2 + static_cast<int>(rng() % 5);
    long n = 2 + static_cast<long>(rng() % 100000);
    auto t = bound_tverberg(d, k, n);
    expect_close(t.decimal, oracle::mpfr_power(n, *t.exponent));
    auto a = bound_akiyama_alon(d, k, n);
    expect_close(a.decimal, oracle::mpfr_power(n, *a.exponent));
    long m = 1 + static_cast<long>(rng() % 100000), r = 1 + static_cast<long>(rng() % 5),
         s = 1 + static_cast<long>(rng() % 50);
    expect_close(bound_kst(n, m, r, s).decimal, oracle::mpfr_kst(n, m, r, s));
  }
}

TEST(Bounds, Precision) {
  auto b = bound_tverberg(2, 2, 10, 5);
  EXPECT_EQ(b.precision_digits, 5);
  EXPECT_EQ(b.decimal, "774.26");
  EXPECT_THROW(bound_tverberg(2, 2, 10, 31), Error);
  EXPECT_THROW(bound_tverberg(2, 2, 10, 0), Error);
}
