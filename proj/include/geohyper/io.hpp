#pragma once

// JSON exchange format for point sets and hypergraphs:
//   {"dimension": 2, "points": [["p/q", "p/q"], ...], "uniformity": 3,
//    "edges": [[i, j, k], ...], "seed": 7}
// Rationals are "p/q" strings so coordinates round-trip exactly.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"
#include "geohyper/hypergraph.hpp"

namespace geohyper {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::ParseError, "rational must be a \"p/q\" string or an integer");
}

inline Json to_json(const Point2& p) { return Json::array({to_json(p.x), to_json(p.y)}); }
inline Json to_json(const Point3& p) { return Json::array({to_json(p.x), to_json(p.y), to_json(p.z)}); }

inline Json to_json(const PointSet& ps) {
  Json j;
  j["dimension"] = ps.dimension();
  Json pts = Json::array();
  if (ps.dimension() == 2)
    for (const auto& p : ps.points2()) pts.push_back(to_json(p));
  else
    for (const auto& p : ps.points3()) pts.push_back(to_json(p));
  j["points"] = std::move(pts);
  return j;
}

inline Json to_json(const GeometricHypergraph& h) {
  Json j = to_json(h.points());
  j["uniformity"] = h.uniformity();
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(e.v);
  j["edges"] = std::move(edges);
  if (auto s = h.points().seed()) j["seed"] = *s;
  return j;
}

inline PointSet point_set_from_json(const Json& j) {
  try {
    int d = j.at("dimension").get<int>();
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    const Json& pts = j.at("points");
    if (d == 2) {
      std::vector<Point2> v;
      for (const auto& p : pts) {
        if (p.size() != 2) throw Error(Errc::ParseError, "2D point needs two coordinates");
        v.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
      }
      return PointSet(std::move(v), seed);
    }
    if (d == 3) {
      std::vector<Point3> v;
      for (const auto& p : pts) {
        if (p.size() != 3) throw Error(Errc::ParseError, "3D point needs three coordinates");
        v.push_back({rational_from_json(p[0]), rational_from_json(p[1]), rational_from_json(p[2])});
      }
      return PointSet(std::move(v), seed);
    }
    throw Error(Errc::ParseError, "dimension must be 2 or 3");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline GeometricHypergraph hypergraph_from_json(const Json& j) {
  PointSet ps = point_set_from_json(j);
  try {
    int r = j.contains("uniformity") ? j.at("uniformity").get<int>() : ps.dimension() + 1;
    std::vector<Simplex> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) edges.emplace_back(e.get<std::vector<VertexId>>());
    return GeometricHypergraph(std::move(ps), r, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

}  // namespace geohyper
