#pragma once

// Extremal search over the complete 3-uniform geometric hypergraph on a
// point set: conflict enumeration, exact maximum via branch-and-bound,
// randomized greedy, and closed-form bound evaluators.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geohyper/detect.hpp"
#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"
#include "geohyper/hypergraph.hpp"

namespace geohyper {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// Forbidden k-tuples of candidate edges (indices into `candidates`).
struct ConflictSet {
  PatternSpec pattern;
  std::vector<Simplex> candidates;
  std::vector<std::vector<std::size_t>> tuples;
};

namespace detail {

inline void require_search_pattern(const PointSet& ps, const PatternSpec& p) {
  if (p.kind == PatternKind::StronglyCrossing && ps.dimension() == 2) return;
  if (p.kind == PatternKind::PairwiseDisjoint && ps.dimension() == 3) return;
  throw Error(Errc::PreconditionUnmet, std::string("pattern ") + pattern_name(p.kind) +
                                           " is not searchable in dimension " + std::to_string(ps.dimension()));
}

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  void tick(const char* what) {
    if (++used > limit) throw Error(Errc::BudgetExceeded, std::string(what) + " exceeded its node budget");
  }
};

}  // namespace detail

inline ConflictSet enumerate_conflicts(const PointSet& ps, PatternSpec pattern,
                                       std::uint64_t budget = kDefaultBudget) {
  detail::require_search_pattern(ps, pattern);
  GeometricHypergraph full = complete_hypergraph(ps, 3);
  ConflictSet cs{pattern, full.edges(), {}};
  auto all = detail::all_edges(full);
  detail::Budget b{budget};
  if (pattern.kind == PatternKind::StronglyCrossing) {
    std::vector<Triangle2> tris;
    for (std::size_t i = 0; i < full.num_edges(); ++i) tris.push_back(full.triangle2(i));
    std::vector<Polygon2> stack;
    detail::disjoint_tuple_search(
        full, all, pattern.k,
        [&](const std::vector<std::size_t>& t) {
          b.tick("conflict enumeration");
          stack.resize(t.size() - 1);
          Polygon2 poly =
              t.size() == 1 ? to_polygon(tris[t.back()]) : clip_convex_by_triangle(stack.back(), tris[t.back()]);
          if (poly.empty()) return false;
          stack.push_back(std::move(poly));
          return true;
        },
        [&](const std::vector<std::size_t>& t) {
          cs.tuples.push_back(t);
          return false;
        });
  } else {
    std::vector<Triangle3> tris;
    for (std::size_t i = 0; i < full.num_edges(); ++i) tris.push_back(full.triangle3(i));
    std::map<std::pair<std::size_t, std::size_t>, bool> cache;
    auto disjoint = [&](std::size_t a, std::size_t c) {
      auto key = std::minmax(a, c);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      bool d = triangles_disjoint_3d(tris[a], tris[c]);
      cache.emplace(key, d);
      return d;
    };
    detail::disjoint_tuple_search(
        full, all, pattern.k,
        [&](const std::vector<std::size_t>& t) {
          b.tick("conflict enumeration");
          for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (!disjoint(t[i], t.back())) return false;
          return true;
        },
        [&](const std::vector<std::size_t>& t) {
          cs.tuples.push_back(t);
          return false;
        });
  }
  return cs;
}

struct ExtremalResult {
  PatternKind pattern;
  int k;
  std::size_t count = 0;
  std::vector<Simplex> edges;
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// All edges through vertex 0: C(n-1, 2) triangles, never containing two
/// vertex-disjoint edges.
inline std::vector<Simplex> star_edges(const PointSet& ps) { return star_construction(ps, 0, 3).edges(); }

/// True iff no forbidden pattern occurs among `edges`.
inline bool pattern_free(const PointSet& ps, const PatternSpec& pattern, const std::vector<Simplex>& edges) {
  GeometricHypergraph h(ps, 3, edges);
  if (pattern.kind == PatternKind::StronglyCrossing) return !find_strongly_crossing(h, pattern.k);
  if (pattern.kind == PatternKind::PairwiseDisjoint) return !find_pairwise_disjoint(h, pattern.k);
  throw Error(Errc::PreconditionUnmet, "unsupported pattern");
}

/// Maximum conflict-free candidate subset: branch-and-bound over candidates
/// sorted by conflict degree. The bound is the number of still-insertable
/// remaining candidates minus a greedy packing of conflict tuples that are
/// forced to lose a remaining member.
inline ExtremalResult extremal_exact(const ConflictSet& cs, std::size_t initial_lower_bound = 0,
                                     std::vector<Simplex> initial_solution = {},
                                     std::uint64_t budget = kDefaultBudget) {
  const std::size_t m = cs.candidates.size();
  const int k = cs.pattern.k;
  std::vector<std::vector<std::size_t>> tuples_of(m);
  for (std::size_t t = 0; t < cs.tuples.size(); ++t)
    for (auto c : cs.tuples[t]) tuples_of[c].push_back(t);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tuples_of[a].size() > tuples_of[b].size(); });

  std::vector<int> chosen_in_tuple(cs.tuples.size(), 0);
  std::vector<char> state(m, 0);  // 0 undecided, 1 chosen, 2 excluded
  std::vector<std::size_t> best_set;
  std::size_t best = initial_lower_bound;
  bool improved = false;
  std::size_t current = 0;
  detail::Budget b{budget};

  auto insertable = [&](std::size_t c) {
    for (auto t : tuples_of[c])
      if (chosen_in_tuple[t] == k - 1) return false;
    return true;
  };

  auto upper_bound = [&](std::size_t pos) {
    std::size_t free_count = 0;
    std::vector<char> is_free(m, 0);
    for (std::size_t i = pos; i < m; ++i)
      if (insertable(order[i])) {
        is_free[order[i]] = 1;
        ++free_count;
      }
    // Conflict tuples fully made of chosen and free members each cost one
    // free member; a greedy family with disjoint free parts gives a valid
    // reduction.
    std::vector<char> spent(m, 0);
    std::size_t forced = 0;
    for (std::size_t i = pos; i < m; ++i) {
      std::size_t c = order[i];
      if (!is_free[c] || spent[c]) continue;
      for (auto t : tuples_of[c]) {
        bool ok = true;
        for (auto o : cs.tuples[t])
          if (!(state[o] == 1 || (is_free[o] && !spent[o]))) { ok = false; break; }
        if (!ok) continue;
        for (auto o : cs.tuples[t])
          if (state[o] != 1) spent[o] = 1;
        ++forced;
        break;
      }
    }
    return current + free_count - forced;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    b.tick("branch-and-bound");
    if (pos == m) {
      if (current > best) {
        best = current;
        improved = true;
        best_set.clear();
        for (std::size_t i = 0; i < m; ++i)
          if (state[i] == 1) best_set.push_back(i);
      }
      return;
    }
    if (upper_bound(pos) <= best) return;
    std::size_t c = order[pos];
    if (insertable(c)) {
      state[c] = 1;
      ++current;
      for (auto t : tuples_of[c]) ++chosen_in_tuple[t];
      rec(pos + 1);
      for (auto t : tuples_of[c]) --chosen_in_tuple[t];
      --current;
    }
    state[c] = 2;
    rec(pos + 1);
    state[c] = 0;
  };
  rec(0);

  ExtremalResult r;
  r.pattern = cs.pattern.kind;
  r.k = k;
  r.exact = true;
  r.nodes = b.used;
  if (improved) {
    for (auto i : best_set) r.edges.push_back(cs.candidates[i]);
  } else {
    r.edges = std::move(initial_solution);
  }
  r.count = r.edges.size();
  return r;
}

/// Exact maximum over all candidate triangles on `ps`, seeded with the star.
/// `initial_solution` must be conflict-free with size `initial_lower_bound`.
inline ExtremalResult extremal_exact(const PointSet& ps, PatternSpec pattern, std::uint64_t budget = kDefaultBudget) {
  ConflictSet cs = enumerate_conflicts(ps, pattern, budget);
  auto star = star_edges(ps);
  std::size_t lb = star.size();
  return extremal_exact(cs, lb, std::move(star), budget);
}

namespace detail {

// Fisher-Yates with raw engine output, portable across standard libraries.
inline void portable_shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace detail

/// Maximal conflict-free set by randomized greedy insertion; the star is
/// returned instead when it is larger.
inline ExtremalResult extremal_greedy(const PointSet& ps, PatternSpec pattern, std::uint64_t seed) {
  detail::require_search_pattern(ps, pattern);
  GeometricHypergraph full = complete_hypergraph(ps, 3);
  const std::size_t m = full.num_edges();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  detail::portable_shuffle(order, rng);

  std::vector<std::uint64_t> mask(m);
  for (std::size_t i = 0; i < m; ++i) mask[i] = detail::vertex_mask(full.edge(i));
  // pair relation: 1 = pairwise conflict-compatible (intersecting for SC,
  // disjoint for D), 0 = not, -1 = unknown
  std::vector<std::vector<signed char>> rel(m, std::vector<signed char>(m, -1));
  std::vector<Triangle2> t2;
  std::vector<Triangle3> t3;
  const bool sc = pattern.kind == PatternKind::StronglyCrossing;
  for (std::size_t i = 0; i < m; ++i) {
    if (sc) t2.push_back(full.triangle2(i));
    else t3.push_back(full.triangle3(i));
  }
  auto related = [&](std::size_t a, std::size_t b) {
    auto& r = rel[a][b];
    if (r < 0) {
      bool v = sc ? !clip_convex_by_triangle(to_polygon(t2[a]), t2[b]).empty() : triangles_disjoint_3d(t3[a], t3[b]);
      r = rel[b][a] = v ? 1 : 0;
    }
    return r == 1;
  };

  std::vector<std::size_t> chosen;
  // Does candidate c complete a forbidden k-tuple with chosen edges?
  auto completes = [&](std::size_t c) {
    std::vector<std::size_t> partners;
    for (auto e : chosen)
      if (!(mask[e] & mask[c]) && related(c, e)) partners.push_back(e);
    std::vector<std::size_t> tuple{c};
    std::vector<Polygon2> polys;
    if (sc) polys.push_back(to_polygon(t2[c]));
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t used) -> bool {
      if (static_cast<int>(tuple.size()) == pattern.k) return true;
      for (std::size_t i = start; i < partners.size(); ++i) {
        std::size_t e = partners[i];
        if (mask[e] & used) continue;
        bool ok = true;
        for (std::size_t j = 1; j < tuple.size() && ok; ++j) ok = related(tuple[j], e);
        if (!ok) continue;
        if (sc) {
          Polygon2 p = clip_convex_by_triangle(polys.back(), t2[e]);
          if (p.empty()) continue;
          polys.push_back(std::move(p));
        }
        tuple.push_back(e);
        if (rec(i + 1, used | mask[e])) return true;
        tuple.pop_back();
        if (sc) polys.pop_back();
      }
      return false;
    };
    return rec(0, mask[c]);
  };

  for (auto c : order)
    if (!completes(c)) chosen.push_back(c);

  ExtremalResult r;
  r.pattern = pattern.kind;
  r.k = pattern.k;
  std::sort(chosen.begin(), chosen.end());
  auto star = star_edges(ps);
  if (star.size() > chosen.size()) {
    r.edges = std::move(star);
  } else {
    for (auto c : chosen) r.edges.push_back(full.edge(c));
  }
  r.count = r.edges.size();
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form bounds

using Decimal = boost::multiprecision::cpp_dec_float_50;

inline constexpr int kDecimalDigits = 30;

struct BoundEstimate {
  std::string theorem;
  std::map<std::string, std::string> parameters;
  std::optional<Rational> exponent;  // exact exponent of n, when the bound is a power of n
  std::optional<Rational> exact_value;
  std::string decimal;  // value rendered to precision_digits significant digits
  int precision_digits = kDecimalDigits;
  std::string asymptotic_form;
  bool constant_unspecified = false;
};

namespace detail {

inline Decimal to_decimal(const Rational& r) {
  return Decimal(r.num().get_str()) / Decimal(r.den().get_str());
}

inline std::string render(const Decimal& d, int digits = kDecimalDigits) {
  if (digits < 1 || digits > kDecimalDigits) throw Error(Errc::PreconditionUnmet, "precision must be in [1, 30]");
  std::ostringstream os;
  os << std::setprecision(digits) << d;
  return os.str();
}

inline Rational pow_int(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline Decimal pow_rational(const Decimal& base, const Rational& e) {
  if (base == 0) return e.sign() == 0 ? Decimal(1) : Decimal(0);
  return boost::multiprecision::pow(base, to_decimal(e));
}

inline std::string str(long v) { return std::to_string(v); }

}  // namespace detail

/// Colored-Tverberg bound: exponent d + 1 - 1/(2k - 1)^d.
inline BoundEstimate bound_tverberg(int d, int k, long n, int digits = kDecimalDigits) {
  if (d < 1 || k < 2) throw Error(Errc::PreconditionUnmet, "bound_tverberg needs d >= 1 and k >= 2");
  BoundEstimate b;
  b.theorem = "tverberg";
  b.parameters = {{"d", detail::str(d)}, {"k", detail::str(k)}, {"n", detail::str(n)}};
  b.exponent = Rational(d + 1) - Rational(1) / detail::pow_int(Rational(2 * k - 1), static_cast<unsigned>(d));
  b.decimal = detail::render(detail::pow_rational(Decimal(n), *b.exponent), digits);
  b.precision_digits = digits;
  b.asymptotic_form = "O(n^(" + b.exponent->to_short_string() + "))";
  return b;
}

/// Akiyama-Alon bound: exponent d - (1/k)^(d-1).
inline BoundEstimate bound_akiyama_alon(int d, int k, long n, int digits = kDecimalDigits) {
  if (d < 1 || k < 2) throw Error(Errc::PreconditionUnmet, "bound_akiyama_alon needs d >= 1 and k >= 2");
  BoundEstimate b;
  b.theorem = "akiyama-alon";
  b.parameters = {{"d", detail::str(d)}, {"k", detail::str(k)}, {"n", detail::str(n)}};
  b.exponent = Rational(d) - detail::pow_int(Rational(1, k), static_cast<unsigned>(d - 1));
  b.decimal = detail::render(detail::pow_rational(Decimal(n), *b.exponent), digits);
  b.precision_digits = digits;
  b.asymptotic_form = "n^(" + b.exponent->to_short_string() + ")";
  return b;
}

/// Kővári-Sós-Turán: (s-1)^(1/r) n m^(1-1/r) + (r-1) m for K_{r,s}-free
/// bipartite graphs with sides n and m.
inline BoundEstimate bound_kst(const Rational& n, const Rational& m, long r, const Rational& s,
                               int digits = kDecimalDigits) {
  if (n < Rational(1) || m < Rational(1) || r < 1 || s < Rational(1))
    throw Error(Errc::PreconditionUnmet, "bound_kst needs n, m, r, s >= 1");
  BoundEstimate b;
  b.theorem = "kovari-sos-turan";
  b.parameters = {{"n", n.to_short_string()}, {"m", m.to_short_string()}, {"r", detail::str(r)},
                  {"s", s.to_short_string()}};
  Rational inv_r(1, r);
  Decimal value = detail::pow_rational(detail::to_decimal(s - Rational(1)), inv_r) * detail::to_decimal(n) *
                      detail::pow_rational(detail::to_decimal(m), Rational(1) - inv_r) +
                  Decimal(r - 1) * detail::to_decimal(m);
  b.decimal = detail::render(value, digits);
  b.precision_digits = digits;
  if (r == 1 || s == Rational(1)) {
    Rational first = r == 1 ? (s - Rational(1)) * n : Rational(0);
    b.exact_value = first + Rational(r - 1) * m;
  }
  b.asymptotic_form = "(s-1)^(1/r) n m^(1-1/r) + (r-1) m";
  return b;
}

inline BoundEstimate bound_kst(long n, long m, long r, long s, int digits = kDecimalDigits) {
  return bound_kst(Rational(n), Rational(m), r, Rational(s), digits);
}

/// The substitution m = n^2, r = k, s = c_k n. Without an explicit c_k the
/// placeholder 1 is used and the estimate is flagged.
inline BoundEstimate bound_kst_strong_crossing(long n, int k, std::optional<Rational> c_k = std::nullopt,
                                               int digits = kDecimalDigits) {
  Rational c = c_k.value_or(Rational(1));
  BoundEstimate b = bound_kst(Rational(n), Rational(n) * Rational(n), k, c * Rational(n), digits);
  b.theorem = "kst-strong-crossing";
  b.parameters["c_k"] = c.to_short_string();
  b.exponent = Rational(3) - Rational(1, k);
  b.asymptotic_form = "n^(" + b.exponent->to_short_string() + ") * c_k^(1/" + std::to_string(k) + ") + " +
                      std::to_string(k - 1) + " n^2";
  b.constant_unspecified = !c_k.has_value();
  return b;
}

}  // namespace geohyper
