#pragma once

#include <string>

#include "geohyper/geohyper.hpp"

namespace support {

inline geohyper::Point2 P(long x, long y) { return {geohyper::Rational(x), geohyper::Rational(y)}; }
inline geohyper::Point3 P(long x, long y, long z) {
  return {geohyper::Rational(x), geohyper::Rational(y), geohyper::Rational(z)};
}
inline geohyper::Rational R(long n, long d = 1) { return geohyper::Rational(n, d); }

#ifdef GEOHYPER_FIXTURES
inline std::string fixture(const std::string& name) { return std::string(GEOHYPER_FIXTURES) + "/" + name; }
inline geohyper::GeometricHypergraph load(const std::string& name) {
  return geohyper::hypergraph_from_json(geohyper::read_json_file(fixture(name)));
}
#endif

}  // namespace support
