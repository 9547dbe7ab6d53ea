#pragma once

#include "gip/geometry.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gip {

// Boundary cycle. Counterclockwise for outer boundaries, clockwise for holes.
// Collinear consecutive vertices are permitted.
struct SimplePolygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  Segment edge(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }
};

inline Rational signed_area2(const SimplePolygon& poly) {
  Rational s = 0;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

inline bool point_on_polygon_boundary(const SimplePolygon& poly, const Point& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (point_on_segment(p, poly.edge(i))) return true;
  return false;
}

// Crossing-number test. Caller guarantees p is not on the boundary.
inline bool point_in_simple_polygon_strict(const SimplePolygon& poly, const Point& p) {
  bool inside = false;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y
      Rational xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (xi > p.x) inside = !inside;
    }
  }
  return inside;
}

inline std::vector<std::string> validate_simple_polygon(const SimplePolygon& poly) {
  std::vector<std::string> defects;
  const auto& v = poly.vertices;
  std::size_t n = v.size();
  if (n < 3) {
    defects.push_back("polygon has fewer than 3 vertices");
    return defects;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] == v[(i + 1) % n]) defects.push_back("consecutive duplicate vertex");
  if (!defects.empty()) return defects;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      IntersectKind k = classify_intersection(poly.edge(i), poly.edge(j));
      if (adjacent) {
        if (k != IntersectKind::SHARED_ENDPOINT_ONLY)
          defects.push_back("adjacent boundary edges intersect beyond the shared vertex");
      } else if (k != IntersectKind::DISJOINT) {
        defects.push_back("non-adjacent boundary edges intersect");
      }
    }
  }
  return defects;
}

// Closed region: outer area minus open hole interiors. Hole boundaries
// belong to the region.
struct PolygonalRegion {
  SimplePolygon outer;
  std::vector<SimplePolygon> holes;
};

enum class RegionLocation { INTERIOR, ON_BOUNDARY, OUTSIDE };

inline std::vector<std::string> validate_region(const PolygonalRegion& region) {
  std::vector<std::string> defects;
  auto outer_defects = validate_simple_polygon(region.outer);
  for (auto& d : outer_defects) defects.push_back("outer: " + d);
  if (!outer_defects.empty()) return defects;
  if (signed_area2(region.outer) <= 0) defects.push_back("outer boundary is not counterclockwise");

  for (std::size_t h = 0; h < region.holes.size(); ++h) {
    const auto& hole = region.holes[h];
    std::string tag = "hole " + std::to_string(h) + ": ";
    auto hd = validate_simple_polygon(hole);
    for (auto& d : hd) defects.push_back(tag + d);
    if (!hd.empty()) continue;
    if (signed_area2(hole) >= 0) defects.push_back(tag + "boundary is not clockwise");
    bool touches_outer = false;
    for (std::size_t i = 0; i < hole.size() && !touches_outer; ++i)
      for (std::size_t j = 0; j < region.outer.size(); ++j)
        if (classify_intersection(hole.edge(i), region.outer.edge(j)) != IntersectKind::DISJOINT) {
          touches_outer = true;
          break;
        }
    if (touches_outer) {
      defects.push_back(tag + "touches the outer boundary");
      continue;
    }
    if (!point_in_simple_polygon_strict(region.outer, hole.vertices[0]))
      defects.push_back(tag + "lies outside the outer polygon");
  }

  for (std::size_t a = 0; a < region.holes.size(); ++a) {
    for (std::size_t b = a + 1; b < region.holes.size(); ++b) {
      const auto& ha = region.holes[a];
      const auto& hb = region.holes[b];
      bool intersects = false;
      for (std::size_t i = 0; i < ha.size() && !intersects; ++i)
        for (std::size_t j = 0; j < hb.size(); ++j)
          if (classify_intersection(ha.edge(i), hb.edge(j)) != IntersectKind::DISJOINT) {
            intersects = true;
            break;
          }
      if (!intersects) {
        // Disjoint boundaries: one could still contain the other.
        if (point_on_polygon_boundary(hb, ha.vertices[0]) ||
            point_in_simple_polygon_strict(hb, ha.vertices[0]) ||
            point_in_simple_polygon_strict(ha, hb.vertices[0]))
          intersects = true;
      }
      if (intersects)
        defects.push_back("holes " + std::to_string(a) + " and " + std::to_string(b) +
                          " are not disjoint");
    }
  }
  return defects;
}

// Exact membership in the closed region. ON_BOUNDARY includes hole boundaries.
inline RegionLocation point_in_region(const PolygonalRegion& region, const Point& p) {
  if (point_on_polygon_boundary(region.outer, p)) return RegionLocation::ON_BOUNDARY;
  for (const auto& hole : region.holes)
    if (point_on_polygon_boundary(hole, p)) return RegionLocation::ON_BOUNDARY;
  if (!point_in_simple_polygon_strict(region.outer, p)) return RegionLocation::OUTSIDE;
  for (const auto& hole : region.holes)
    if (point_in_simple_polygon_strict(hole, p)) return RegionLocation::OUTSIDE;
  return RegionLocation::INTERIOR;
}

namespace detail {

// Parameter of p along s, using the dominant axis. p must lie on line(s).
inline Rational segment_parameter(const Segment& s, const Point& p) {
  Rational dx = s.b.x - s.a.x;
  Rational dy = s.b.y - s.a.y;
  if (rat_abs(dx) >= rat_abs(dy)) return (p.x - s.a.x) / dx;
  return (p.y - s.a.y) / dy;
}

inline void collect_boundary_cuts(const Segment& s, const SimplePolygon& poly,
                                  std::vector<Rational>& cuts) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Segment e = poly.edge(i);
    switch (classify_intersection(s, e)) {
      case IntersectKind::DISJOINT:
        break;
      case IntersectKind::PROPER_CROSSING:
        cuts.push_back(segment_parameter(s, crossing_point(s, e)));
        break;
      case IntersectKind::SHARED_ENDPOINT_ONLY:
      case IntersectKind::TOUCHING: {
        for (const Point* q : {&e.a, &e.b})
          if (point_on_segment(*q, s)) cuts.push_back(segment_parameter(s, *q));
        for (const Point* q : {&s.a, &s.b})
          if (point_on_segment(*q, e)) cuts.push_back(segment_parameter(s, *q));
        break;
      }
      case IntersectKind::OVERLAPPING: {
        for (const Point* q : {&e.a, &e.b})
          if (point_on_segment(*q, s)) cuts.push_back(segment_parameter(s, *q));
        break;
      }
    }
  }
}

}  // namespace detail

// True iff every point of the closed segment belongs to the closed region.
// Subdivides s at all boundary intersections and tests each piece's midpoint.
inline bool segment_in_region(const PolygonalRegion& region, const Segment& s) {
  if (point_in_region(region, s.a) == RegionLocation::OUTSIDE) return false;
  if (point_in_region(region, s.b) == RegionLocation::OUTSIDE) return false;

  std::vector<Rational> cuts;
  cuts.push_back(0);
  cuts.push_back(1);
  detail::collect_boundary_cuts(s, region.outer, cuts);
  for (const auto& hole : region.holes) detail::collect_boundary_cuts(s, hole, cuts);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Point d = s.b - s.a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < 0 || cuts[i + 1] > 1) continue;
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    Point m = s.a + mid * d;
    if (point_in_region(region, m) == RegionLocation::OUTSIDE) return false;
  }
  return true;
}

}  // namespace gip
