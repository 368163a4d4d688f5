#pragma once

// Command implementations behind the geohyper executable. Each command takes
// a RunConfig and returns its payload as text, so tests can drive them
// without spawning processes. Payloads never contain timing data unless
// explicitly requested.

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geohyper/geohyper.hpp"

namespace geohyper::cli {

enum ExitCode : int { kOk = 0, kPrecondition = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  int dimension = 2;
  std::size_t n = 10;
  int uniformity = 3;
  std::string pattern = "strongly-crossing";
  int k = 2;
  std::uint64_t seed = 1;
  bool convex = false;
  std::optional<VertexId> star_center;
  bool complete = false;
  std::uint64_t budget = kDefaultBudget;
  std::string input;
  std::string output;
  std::string mode = "exact";
  std::string scenario = "four-crossing";
  std::optional<std::uint64_t> random_scenario;
  std::size_t min_apexes = kDefaultMinApexes;
  std::optional<VertexId> apex;
  std::string bases;
  std::string apexes;
  std::size_t n_min = 9;
  std::size_t n_max = 13;
  std::size_t seeds = 5;
  bool exact = false;
  bool timing = false;
  std::string emit_svg;
  std::string svg_out;
  int precision = kDecimalDigits;
};

/// Rejects parameter combinations that cannot be dispatched.
inline void validate(const RunConfig& c) {
  auto fail = [](const std::string& m) { throw Error(Errc::PreconditionUnmet, m); };
  if (c.dimension != 2 && c.dimension != 3) fail("--dim must be 2 or 3");
  if (c.k < 2) fail("--k must be at least 2");
  if (c.command == "detect" || c.command == "extremal" || c.command == "experiment") {
    PatternKind p = parse_pattern(c.pattern);
    if (c.command != "detect" && p != PatternKind::StronglyCrossing && p != PatternKind::PairwiseDisjoint)
      fail("only strongly-crossing and disjoint patterns are searchable");
    if (c.command == "experiment" && c.n_min > c.n_max) fail("--n-min exceeds --n-max");
  }
  if (c.command == "generate") {
    if (c.convex && c.dimension != 2) fail("--convex requires --dim 2");
    if (c.uniformity < 2 || c.uniformity > c.dimension + 1) fail("--uniformity out of range");
  }
}

inline Json witness_json(const GeometricHypergraph& h, const std::vector<std::size_t>& edges) {
  Json e = Json::array(), v = Json::array();
  for (auto i : edges) {
    e.push_back(i);
    v.push_back(h.edge(i).v);
  }
  return Json{{"edges", e}, {"vertices", v}};
}

// --------------------------------------------------------------------------

inline std::string cmd_generate(const RunConfig& c) {
  validate(c);
  PointSet ps = c.convex ? generate_convex(c.n, c.seed) : generate_random(c.dimension, c.n, c.seed);
  if (auto v = c.dimension == 2 ? validate_general_position(std::span<const Point2>(ps.points2()))
                                : validate_general_position(std::span<const Point3>(ps.points3())))
    throw Error(Errc::GenerationFailed, v->describe());
  std::vector<Simplex> edges;
  if (c.star_center) edges = star_construction(ps, *c.star_center, c.uniformity).edges();
  else if (c.complete) edges = complete_hypergraph(ps, c.uniformity).edges();
  GeometricHypergraph h(std::move(ps), c.uniformity, std::move(edges));
  return to_json(h).dump(2) + "\n";
}

inline std::string cmd_detect(const RunConfig& c) {
  validate(c);
  GeometricHypergraph h = hypergraph_from_json(read_json_file(c.input));
  PatternKind kind = parse_pattern(c.pattern);
  Json out{{"pattern", pattern_name(kind)}, {"k", c.k}};
  switch (kind) {
    case PatternKind::StronglyCrossing: {
      auto w = find_strongly_crossing(h, c.k);
      out["found"] = w.has_value();
      if (w) {
        auto cert = strongly_crossing_certificate(h, w->edges);
        if (!cert || !(*cert == *w->certificate)) throw Error(Errc::CaseFallthrough, "witness failed re-verification");
        out["witness"] = witness_json(h, w->edges);
        out["certificate"] = to_json(*w->certificate);
      }
      break;
    }
    case PatternKind::PairwiseDisjoint: {
      auto w = find_pairwise_disjoint(h, c.k);
      out["found"] = w.has_value();
      if (w) {
        for (std::size_t i = 0; i < w->edges.size(); ++i)
          for (std::size_t j = i + 1; j < w->edges.size(); ++j)
            if (!h.edge(w->edges[i]).disjoint(h.edge(w->edges[j])) ||
                !triangles_disjoint_3d(h.triangle3(w->edges[i]), h.triangle3(w->edges[j])))
              throw Error(Errc::CaseFallthrough, "witness failed re-verification");
        out["witness"] = witness_json(h, w->edges);
      }
      break;
    }
    case PatternKind::PairwiseCrossing: {
      auto w = find_pairwise_crossing_segments(h, c.k);
      out["found"] = w.has_value();
      if (w) out["witness"] = witness_json(h, *w);
      break;
    }
    case PatternKind::ConvexClockwise: {
      auto w = find_convex_pattern(h, c.k);
      out["found"] = w.has_value();
      if (w) {
        auto cert = strongly_crossing_certificate(h, w->edges);
        if (!cert) throw Error(Errc::CaseFallthrough, "convex pattern is not strongly crossing");
        out["witness"] = witness_json(h, w->edges);
        out["certificate"] = to_json(*cert);
      }
      break;
    }
  }
  return out.dump(2) + "\n";
}

namespace detail {

inline std::vector<VertexPair> parse_pairs(const std::string& s) {
  std::vector<VertexPair> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(Errc::ParseError, "base '" + item + "' must be i-j");
    try {
      out.push_back({static_cast<VertexId>(std::stoul(item.substr(0, dash))),
                     static_cast<VertexId>(std::stoul(item.substr(dash + 1)))});
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "base '" + item + "' must be i-j");
    }
  }
  return out;
}

inline std::vector<VertexId> parse_ids(const std::string& s) {
  std::vector<VertexId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<VertexId>(std::stoul(item)));
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "vertex id '" + item + "' is not a number");
    }
  }
  return out;
}

inline Json pair_json(const VertexPair& p) { return Json::array({p.first, p.second}); }

}  // namespace detail

inline std::string cmd_witness(const RunConfig& c) {
  validate(c);
  Json trace{{"scenario", c.scenario}};

  if (c.scenario == "four-crossing" || c.scenario == "greedy") {
    std::optional<GeometricHypergraph> h;
    std::vector<VertexPair> bases;
    std::vector<VertexId> apexes;
    const std::size_t k = c.scenario == "four-crossing" ? 4 : static_cast<std::size_t>(c.k);
    if (c.random_scenario) {
      std::size_t extra = c.scenario == "four-crossing" ? std::max<std::size_t>(c.min_apexes, 3) : k;
      auto sc = random_crossing_scenario(k, extra, *c.random_scenario);
      h.emplace(std::move(sc.hypergraph));
      bases = sc.bases;
      apexes = sc.apexes;
      trace["hypergraph"] = to_json(*h);
    } else {
      h.emplace(hypergraph_from_json(read_json_file(c.input)));
      bases = detail::parse_pairs(c.bases);
      apexes = detail::parse_ids(c.apexes);
      if (c.apex) apexes = {*c.apex};
    }

    if (c.scenario == "four-crossing") {
      std::optional<VertexId> v = apexes.empty() ? std::nullopt : std::optional<VertexId>(apexes.front());
      FourCrossingExtraction ex;
      if (v && bases.size() == 4) {
        ex = extract_sc3_from_four_crossing(*h, *v, {bases[0], bases[1], bases[2], bases[3]}, c.min_apexes);
      } else {
        auto found = locate_four_crossing(*h, c.min_apexes);
        if (!found) throw Error(Errc::PreconditionUnmet, "no apex has four pairwise crossing bases in its link graph");
        v = found->first.v;
        bases.assign(found->first.bases.begin(), found->first.bases.end());
        ex = found->second;
      }
      trace["apex"] = *v;
      Json jb = Json::array();
      for (auto& b : bases) jb.push_back(detail::pair_json(b));
      trace["bases"] = jb;
      trace["top_level_visits"] = ex.visited.size();
      Json order = Json::array();
      for (auto i : ex.visited) order.push_back(i);
      trace["visit_order"] = order;
      trace["case"] = ex.case_id;
      if (ex.crosses_right) trace["branch"] = *ex.crosses_right ? "right" : "left";
      std::vector<std::size_t> edges(ex.edges.begin(), ex.edges.end());
      auto cert = strongly_crossing_certificate(*h, edges);
      if (!cert) throw Error(Errc::CaseFallthrough, "extraction failed re-verification");
      trace["edges"] = witness_json(*h, edges);
      trace["point"] = to_json(ex.point);
      trace["certificate"] = to_json(*cert);
    } else {
      if (bases.empty() || apexes.size() != bases.size()) {
        auto site = locate_greedy_site(*h, c.k);
        if (!site) throw Error(Errc::PreconditionUnmet, "no k pairwise crossing bases share k apexes above them");
        bases = site->bases;
        apexes = site->apexes;
      }
      auto g = greedy_helly_selection(*h, bases, apexes);
      Json jb = Json::array(), ja = Json::array(), jx = Json::array(), ji = Json::array();
      for (auto& b : g.bases) jb.push_back(detail::pair_json(b));
      for (auto a : g.apexes) ja.push_back(a);
      for (auto& x : g.right_crossings) jx.push_back(to_json(x));
      for (auto& iv : g.intervals)
        ji.push_back(Json::array({iv.lo ? to_json(*iv.lo) : Json("-inf"), iv.hi ? to_json(*iv.hi) : Json("inf")}));
      trace["bases"] = jb;
      trace["apex_order"] = ja;
      trace["right_crossings"] = jx;
      trace["intervals"] = ji;
      trace["pairwise_intersecting"] = g.pairwise_intersecting;
      trace["edges"] = witness_json(*h, g.edges);
      if (!strongly_crossing_certificate(*h, g.edges))
        throw Error(Errc::CaseFallthrough, "selection failed re-verification");
      trace["point"] = to_json(g.point);
    }
    return trace.dump(2) + "\n";
  }

  if (c.scenario == "disjoint") {
    GeometricHypergraph h = c.random_scenario ? random_space_hypergraph(c.n, 60, *c.random_scenario)
                                              : hypergraph_from_json(read_json_file(c.input));
    if (c.random_scenario) trace["hypergraph"] = to_json(h);
    auto res = disjoint_pair_pipeline(h);
    const auto& col = res.coloring;
    std::size_t n = h.num_vertices();
    std::size_t degree_sum = 0;
    for (auto d : col.blue_degree) degree_sum += d;
    trace["coloring"] = {{"edges", h.num_edges()},
                         {"red", col.red_count},
                         {"blue", col.blue_count},
                         {"blue_degree_sum", degree_sum},
                         {"lower_bound", static_cast<long long>(3 * h.num_edges()) - static_cast<long long>(3 * n * n)}};
    trace["center"] = res.center;
    trace["sphere"] = {{"vertices", res.sphere_vertices}, {"arcs", res.sphere_arcs},
                       {"avoiding_threshold", 2 * static_cast<long long>(res.sphere_vertices) - 2}};
    trace["found"] = res.pair.has_value();
    if (!res.pair) {
      trace["reason"] = res.failure;
      return trace.dump(2) + "\n";
    }
    const auto& p = *res.pair;
    if (!triangles_disjoint_3d(h.triangle3(p.blue_edge), h.triangle3(p.red_edge)) ||
        !h.edge(p.blue_edge).disjoint(h.edge(p.red_edge)))
      throw Error(Errc::CaseFallthrough, "pair failed re-verification");
    trace["avoiding_arcs"] = {{"xy", detail::pair_json(p.xy)}, {"wz", detail::pair_json(p.wz)}};
    trace["red_apex"] = p.p;
    trace["disjoint_pair"] = witness_json(h, {p.blue_edge, p.red_edge});
    return trace.dump(2) + "\n";
  }
  throw Error(Errc::PreconditionUnmet, "unknown scenario '" + c.scenario + "' (four-crossing, greedy, disjoint)");
}

inline Json extremal_json(const ExtremalResult& r, std::size_t n) {
  Json e = Json::array();
  for (const auto& s : r.edges) e.push_back(s.v);
  return Json{{"pattern", pattern_name(r.pattern)}, {"k", r.k},       {"n", n},
              {"count", r.count},                  {"exact", r.exact}, {"star_count", binomial(n - 1, 2)},
              {"edges", e}};
}

inline Json bound_json(const BoundEstimate& b) {
  Json params = Json::object();
  for (const auto& [k, v] : b.parameters) params[k] = v;
  Json j{{"theorem", b.theorem}, {"parameters", params}};
  if (b.exponent) j["exponent"] = to_json(*b.exponent);
  if (b.exact_value) j["exact_value"] = to_json(*b.exact_value);
  j["decimal"] = b.decimal;
  j["precision_digits"] = b.precision_digits;
  j["asymptotic_form"] = b.asymptotic_form;
  if (b.constant_unspecified) j["constant_unspecified"] = true;
  return j;
}

inline PointSet experiment_points(const RunConfig& c, PatternKind kind, std::size_t n, std::uint64_t seed) {
  if (kind == PatternKind::PairwiseDisjoint) return generate_random(3, n, seed);
  return c.convex ? generate_convex(n, seed) : generate_random(2, n, seed);
}

inline std::string cmd_extremal(const RunConfig& c) {
  validate(c);
  PatternKind kind = parse_pattern(c.pattern);
  PointSet ps = !c.input.empty() ? point_set_from_json(read_json_file(c.input)) : experiment_points(c, kind, c.n, c.seed);
  PatternSpec spec(kind, c.k);
  ExtremalResult r = c.mode == "greedy" ? extremal_greedy(ps, spec, c.seed) : extremal_exact(ps, spec, c.budget);
  if (!pattern_free(ps, spec, r.edges)) throw Error(Errc::CaseFallthrough, "result contains a forbidden pattern");
  Json out = extremal_json(r, ps.size());
  out["label"] = "per-configuration maximum (lower bound on ex)";
  Json bounds = Json::array();
  auto n = static_cast<long>(ps.size());
  std::vector<BoundEstimate> est;
  if (kind == PatternKind::StronglyCrossing) {
    est.push_back(bound_tverberg(2, c.k, n, c.precision));
    est.push_back(bound_kst_strong_crossing(n, c.k, std::nullopt, c.precision));
  } else {
    est.push_back(bound_akiyama_alon(3, c.k, n, c.precision));
  }
  for (const auto& b : est) bounds.push_back(bound_json(b));
  out["bounds"] = bounds;
  out["points"] = to_json(ps)["points"];
  return out.dump(2) + "\n";
}

inline const char* kCsvHeader = "seed,n,pattern,k,star_count,greedy_count,exact_count,exact_flag,runtime_ms,best_over_n2";

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t star = 0;
  std::size_t greedy = 0;
  std::optional<std::size_t> exact;
  std::string exact_flag = "false";
  long long runtime_ms = 0;
};

inline std::string cmd_experiment(const RunConfig& c, std::string* svg = nullptr) {
  validate(c);
  PatternKind kind = parse_pattern(c.pattern);
  PatternSpec spec(kind, c.k);
  std::vector<ExperimentRow> rows;
  for (std::size_t n = c.n_min; n <= c.n_max; ++n)
    for (std::uint64_t s = 1; s <= c.seeds; ++s) {
      auto t0 = std::chrono::steady_clock::now();
      ExperimentRow row;
      row.seed = s;
      row.n = n;
      PointSet ps = experiment_points(c, kind, n, s);
      row.star = binomial(n - 1, 2);
      row.greedy = extremal_greedy(ps, spec, s).count;
      if (c.exact) {
        try {
          row.exact = extremal_exact(ps, spec, c.budget).count;
          row.exact_flag = "true";
        } catch (const Error& e) {
          if (e.code() != Errc::BudgetExceeded) throw;
          row.exact_flag = "budget_exceeded";
        }
      }
      row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      rows.push_back(row);
    }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return std::tie(a.n, a.seed) < std::tie(b.n, b.seed); });

  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (const auto& r : rows) {
    std::size_t best = std::max(r.greedy, r.exact.value_or(0));
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", static_cast<double>(best) / static_cast<double>(r.n * r.n));
    csv << r.seed << ',' << r.n << ',' << pattern_name(kind) << ',' << c.k << ',' << r.star << ',' << r.greedy << ','
        << (r.exact ? std::to_string(*r.exact) : "") << ',' << r.exact_flag << ','
        << (c.timing ? std::to_string(r.runtime_ms) : "") << ',' << ratio << '\n';
  }

  if (svg && c.emit_svg == "counts") {
    std::vector<std::pair<double, double>> star, greedy, exact;
    for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
      double g = 0, e = 0;
      std::size_t cnt = 0, ecnt = 0;
      for (const auto& r : rows)
        if (r.n == n) {
          g += static_cast<double>(r.greedy);
          ++cnt;
          if (r.exact) {
            e += static_cast<double>(*r.exact);
            ++ecnt;
          }
        }
      star.emplace_back(static_cast<double>(n), static_cast<double>(binomial(n - 1, 2)));
      if (cnt) greedy.emplace_back(static_cast<double>(n), g / static_cast<double>(cnt));
      if (ecnt) exact.emplace_back(static_cast<double>(n), e / static_cast<double>(ecnt));
    }
    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series{{"star", star},
                                                                                        {"greedy", greedy}};
    if (!exact.empty()) series.push_back({"exact", exact});
    *svg = svg::series_plot(series);
  }
  if (svg && c.emit_svg == "arrangements") {
    GeometricHypergraph g = hypergraph_from_json(read_json_file(c.input));
    if (g.uniformity() != 2 || g.dimension() != 2)
      throw Error(Errc::UniformityMismatch, "arrangement fixture must be a plane geometric graph");
    std::vector<Segment2> segs;
    for (std::size_t i = 0; i < g.num_edges(); ++i) segs.push_back(g.segment2(i));
    *svg = svg::arrangement(segs, top_level(segs));
  }
  return csv.str();
}

inline int exit_code_for(const Error& e) { return e.code() == Errc::BudgetExceeded ? kBudget : kPrecondition; }

}  // namespace geohyper::cli
