#pragma once

#include "gip/rational.hpp"

#include <compare>
#include <optional>
#include <utility>

namespace gip {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline bool lex_less(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Closed segment with distinct endpoints.
struct Segment {
  Point a;
  Point b;
};

enum class Orientation { CCW, CW, COLLINEAR };

inline Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  Rational c = cross(p, q, r);
  if (c > 0) return Orientation::CCW;
  if (c < 0) return Orientation::CW;
  return Orientation::COLLINEAR;
}

// p inside the closed axis-aligned box of s, assuming p collinear with s.
inline bool collinear_on_segment(const Point& p, const Segment& s) {
  return rat_min(s.a.x, s.b.x) <= p.x && p.x <= rat_max(s.a.x, s.b.x) &&
         rat_min(s.a.y, s.b.y) <= p.y && p.y <= rat_max(s.a.y, s.b.y);
}

inline bool point_on_segment(const Point& p, const Segment& s) {
  return orientation(s.a, s.b, p) == Orientation::COLLINEAR && collinear_on_segment(p, s);
}

// Strictly between the endpoints (relative interior of the segment).
inline bool point_in_segment_interior(const Point& p, const Segment& s) {
  return point_on_segment(p, s) && !(p == s.a) && !(p == s.b);
}

enum class IntersectKind {
  DISJOINT,
  SHARED_ENDPOINT_ONLY,
  PROPER_CROSSING,
  TOUCHING,
  OVERLAPPING,
};

// Exact intersection point of two properly crossing segments.
inline Point crossing_point(const Segment& s, const Segment& t) {
  Point r = s.b - s.a;
  Point d = t.b - t.a;
  Rational denom = r.x * d.y - r.y * d.x;
  Point w = t.a - s.a;
  Rational u = (w.x * d.y - w.y * d.x) / denom;
  return s.a + u * r;
}

// Classification of the intersection of two closed segments.
//   SHARED_ENDPOINT_ONLY: exactly one common point, an endpoint of both.
//   TOUCHING: exactly one common point, an endpoint of at most one.
//   OVERLAPPING: a positive-length common subsegment.
inline IntersectKind classify_intersection(const Segment& s1, const Segment& s2) {
  Orientation o1 = orientation(s1.a, s1.b, s2.a);
  Orientation o2 = orientation(s1.a, s1.b, s2.b);
  Orientation o3 = orientation(s2.a, s2.b, s1.a);
  Orientation o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == Orientation::COLLINEAR && o2 == Orientation::COLLINEAR) {
    // Both segments on one line; compare 1-d extents along the dominant axis.
    bool use_x = s1.a.x != s1.b.x || s2.a.x != s2.b.x;
    auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
    Rational lo1 = rat_min(coord(s1.a), coord(s1.b)), hi1 = rat_max(coord(s1.a), coord(s1.b));
    Rational lo2 = rat_min(coord(s2.a), coord(s2.b)), hi2 = rat_max(coord(s2.a), coord(s2.b));
    Rational lo = rat_max(lo1, lo2), hi = rat_min(hi1, hi2);
    if (lo > hi) return IntersectKind::DISJOINT;
    if (lo < hi) return IntersectKind::OVERLAPPING;
    // Single shared point; it is an endpoint of both segments.
    return IntersectKind::SHARED_ENDPOINT_ONLY;
  }

  auto opposite = [](Orientation a, Orientation b) {
    return (a == Orientation::CCW && b == Orientation::CW) ||
           (a == Orientation::CW && b == Orientation::CCW);
  };
  if (opposite(o1, o2) && opposite(o3, o4)) return IntersectKind::PROPER_CROSSING;

  // At most one common point now; find it if any.
  std::optional<Point> touch;
  if (o1 == Orientation::COLLINEAR && collinear_on_segment(s2.a, s1)) touch = s2.a;
  else if (o2 == Orientation::COLLINEAR && collinear_on_segment(s2.b, s1)) touch = s2.b;
  else if (o3 == Orientation::COLLINEAR && collinear_on_segment(s1.a, s2)) touch = s1.a;
  else if (o4 == Orientation::COLLINEAR && collinear_on_segment(s1.b, s2)) touch = s1.b;
  if (!touch) return IntersectKind::DISJOINT;

  bool end1 = *touch == s1.a || *touch == s1.b;
  bool end2 = *touch == s2.a || *touch == s2.b;
  return (end1 && end2) ? IntersectKind::SHARED_ENDPOINT_ONLY : IntersectKind::TOUCHING;
}

}  // namespace gip
