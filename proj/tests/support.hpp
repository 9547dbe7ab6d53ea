#pragma once

#include "gip/instance.hpp"

#include <random>

namespace gip::test {

inline Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Point pt(long xn, long xd, long yn, long yd) {
  return {Rational(xn, xd), Rational(yn, yd)};
}

inline PolygonalRegion unit_square() {
  return {{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}}, {}};
}

inline PolygonalRegion square_with_center_hole() {
  PolygonalRegion r = unit_square();
  r.holes.push_back({{pt(1, 4, 1, 4), pt(1, 4, 3, 4), pt(3, 4, 3, 4), pt(3, 4, 1, 4)}});
  return r;
}

// Triangle region used by several drawing examples.
inline GipInstance triangle_path_instance() {
  GipInstance inst;
  inst.region.outer.vertices = {pt(0, 0), pt(4, 0), pt(2, 3)};
  inst.graph.vertex_ids = {"a", "v", "b"};
  inst.graph.edges = {{"a", "v"}, {"v", "b"}};
  inst.fixed = {{"a", pt(0, 0)}, {"b", pt(4, 0)}};
  return inst;
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 8) {
  std::uniform_int_distribution<long> dd(1, max_den);
  long d = dd(rng);
  std::uniform_int_distribution<long> nn(lo * d, hi * d);
  return Rational(nn(rng), d);
}

}  // namespace gip::test
