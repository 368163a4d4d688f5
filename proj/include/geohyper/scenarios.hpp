#pragma once

// Random instances satisfying the preconditions of the witness extractors:
// k pairwise crossing bases plus apexes above every base line and inside
// every base's x-range, with H containing every apex/base triangle.

#include <cstdint>
#include <random>
#include <vector>

#include "geohyper/arrangement.hpp"
#include "geohyper/detect.hpp"
#include "geohyper/hypergraph.hpp"

namespace geohyper {

struct CrossingScenario {
  GeometricHypergraph hypergraph;
  std::vector<VertexPair> bases;
  std::vector<VertexId> apexes;  // vertices above every base
};

namespace detail {

inline long draw_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

}  // namespace detail

/// Bases are long segments through small perturbations of a common center
/// with random slopes; apexes sit in the central x-window at a random height
/// above the top level.
inline CrossingScenario random_crossing_scenario(std::size_t k, std::size_t num_apexes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const long cx = detail::draw_range(rng, -1000, 1000);
    const long cy = detail::draw_range(rng, -1000, 1000);
    const long jitter = detail::draw_range(rng, 0, 60);
    std::vector<Point2> pts;
    std::vector<Segment2> segs;
    for (std::size_t i = 0; i < k; ++i) {
      Rational slope(detail::draw_range(rng, -300, 300), 100);
      long a = detail::draw_range(rng, 200, 1200);
      long b = detail::draw_range(rng, 200, 1200);
      Point2 p{Rational(cx - a), Rational(cy) - Rational(a) * slope + Rational(detail::draw_range(rng, -jitter, jitter))};
      Point2 q{Rational(cx + b), Rational(cy) + Rational(b) * slope + Rational(detail::draw_range(rng, -jitter, jitter))};
      pts.push_back(p);
      pts.push_back(q);
      segs.emplace_back(p, q);
    }
    bool crossing = true;
    for (std::size_t i = 0; i < k && crossing; ++i)
      for (std::size_t j = i + 1; j < k && crossing; ++j)
        if (!segments_cross_disjoint(segs[i], segs[j])) crossing = false;
    if (!crossing) continue;
    std::vector<Line2> lines;
    for (auto& s : segs) {
      if (s.a.x == s.b.x) break;
      lines.push_back(Line2::supporting(s));
    }
    if (lines.size() != k) continue;
    TopLevel top;
    try {
      top = upper_envelope(lines);
    } catch (const Error&) {
      continue;
    }
    for (std::size_t i = 0; i < num_apexes; ++i) {
      Rational x(cx + detail::draw_range(rng, -150, 150));
      Rational y = detail::ceil(top.y_at(x)) + Rational(detail::draw_range(rng, 1, 600));
      pts.push_back({x, y});
    }
    std::optional<PointSet> ps;
    try {
      ps.emplace(pts, seed);
    } catch (const Error&) {
      continue;
    }
    std::vector<VertexPair> bases;
    for (std::size_t i = 0; i < k; ++i)
      bases.push_back({static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1)});
    std::vector<VertexId> apexes;
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < num_apexes; ++i) {
      auto v = static_cast<VertexId>(2 * k + i);
      apexes.push_back(v);
      for (auto& b : bases) edges.push_back(Simplex{v, b.first, b.second});
    }
    GeometricHypergraph h(*ps, 3, std::move(edges));
    // Every apex must classify as strictly above each base.
    bool valid = true;
    for (const auto& e : h.edges()) {
      auto d = classify_base(h.points(), e);
      if (d.position != ApexPosition::Above || d.apex < 2 * k) valid = false;
    }
    if (!valid) continue;
    return {std::move(h), std::move(bases), std::move(apexes)};
  }
  throw Error(Errc::GenerationFailed, "could not build a crossing scenario");
}

/// Random 3-uniform hypergraph in 3-space: each triple kept with the given
/// probability (in percent).
inline GeometricHypergraph random_space_hypergraph(std::size_t n, unsigned percent, std::uint64_t seed) {
  PointSet ps = generate_random(3, n, seed, 1000);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Simplex> edges;
  detail::for_each_combination(n, 3, [&](const std::vector<VertexId>& c) {
    if (rng() % 100 < percent) edges.emplace_back(c);
  });
  return GeometricHypergraph(std::move(ps), 3, std::move(edges));
}

}  // namespace geohyper
