#pragma once

#include "gip/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gip {

enum class ViolationKind {
  DUPLICATE_POINT,
  FIXED_MISMATCH,
  VERTEX_OUTSIDE,
  EDGE_LEAVES_REGION,
  EDGE_PAIR_CONFLICT,
  VERTEX_ON_EDGE,
  ROTATION_MISMATCH,
  MISSING_POSITION,
};

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> ids;
};

struct VerificationReport {
  bool verdict = false;
  std::vector<Violation> violations;
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DUPLICATE_POINT: return "DUPLICATE_POINT";
    case ViolationKind::FIXED_MISMATCH: return "FIXED_MISMATCH";
    case ViolationKind::VERTEX_OUTSIDE: return "VERTEX_OUTSIDE";
    case ViolationKind::EDGE_LEAVES_REGION: return "EDGE_LEAVES_REGION";
    case ViolationKind::EDGE_PAIR_CONFLICT: return "EDGE_PAIR_CONFLICT";
    case ViolationKind::VERTEX_ON_EDGE: return "VERTEX_ON_EDGE";
    case ViolationKind::ROTATION_MISMATCH: return "ROTATION_MISMATCH";
    case ViolationKind::MISSING_POSITION: return "MISSING_POSITION";
  }
  return "?";
}

struct CoincidentNeighborError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// CCW-from-positive-x comparator on directions; exact, no trigonometry.
inline int angle_half(const Point& d) {
  if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;  // [0, pi)
  return 1;                                        // [pi, 2pi)
}

inline bool angle_less(const Point& d1, const Point& d2) {
  int h1 = angle_half(d1), h2 = angle_half(d2);
  if (h1 != h2) return h1 < h2;
  Rational c = d1.x * d2.y - d1.y * d2.x;
  return c > 0;
}

inline bool cyclically_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[(i + shift) % n]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Neighbors of v sorted counterclockwise around its drawn point.
// Ties (coincident directions) break by distance along the ray, then id.
inline std::vector<VertexId> angular_order(const Drawing& d, const VertexId& v,
                                           const GipGraph& g) {
  Point origin = d.at(v);
  auto nbrs = g.neighbors(v);
  std::sort(nbrs.begin(), nbrs.end());
  for (const auto& n : nbrs)
    if (d.at(n) == origin)
      throw CoincidentNeighborError("neighbor " + n + " coincides with " + v);
  std::stable_sort(nbrs.begin(), nbrs.end(), [&](const VertexId& p, const VertexId& q) {
    Point dp = d.at(p) - origin;
    Point dq = d.at(q) - origin;
    if (detail::angle_less(dp, dq)) return true;
    if (detail::angle_less(dq, dp)) return false;
    Rational np = dp.x * dp.x + dp.y * dp.y;
    Rational nq = dq.x * dq.x + dq.y * dq.y;
    if (np != nq) return np < nq;
    return p < q;
  });
  return nbrs;
}

// Exact check of the Graph-in-Polygon drawing conditions: distinct vertex
// points, fixed vertices respected, everything inside the closed region, no
// two edge segments intersecting except at a common graph vertex, no vertex
// interior to a non-incident edge, and (when present) the rotation system.
inline VerificationReport verify_drawing(const GipInstance& inst, const Drawing& drawing) {
  VerificationReport report;
  auto add = [&](ViolationKind k, std::vector<VertexId> ids) {
    report.violations.push_back({k, std::move(ids)});
  };

  const GipGraph& g = inst.graph;
  for (const auto& v : g.vertex_ids)
    if (!drawing.count(v)) add(ViolationKind::MISSING_POSITION, {v});
  if (!report.violations.empty()) return report;

  // (a) pairwise distinct points
  for (std::size_t i = 0; i < g.vertex_ids.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_ids.size(); ++j)
      if (drawing.at(g.vertex_ids[i]) == drawing.at(g.vertex_ids[j]))
        add(ViolationKind::DUPLICATE_POINT, {g.vertex_ids[i], g.vertex_ids[j]});

  // (b) fixed vertices at their assigned points
  for (const auto& [v, p] : inst.fixed)
    if (drawing.count(v) && !(drawing.at(v) == p)) add(ViolationKind::FIXED_MISMATCH, {v});

  // (c) vertices inside the closed region
  for (const auto& v : g.vertex_ids)
    if (point_in_region(inst.region, drawing.at(v)) == RegionLocation::OUTSIDE)
      add(ViolationKind::VERTEX_OUTSIDE, {v});

  // (d) edges inside the closed region
  for (const auto& [a, b] : g.edges) {
    if (drawing.at(a) == drawing.at(b)) continue;  // already DUPLICATE_POINT
    if (!segment_in_region(inst.region, {drawing.at(a), drawing.at(b)}))
      add(ViolationKind::EDGE_LEAVES_REGION, {a, b});
  }

  // (e) pairwise edge conflicts
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto& [a, b] = g.edges[i];
      const auto& [c, d] = g.edges[j];
      if (drawing.at(a) == drawing.at(b) || drawing.at(c) == drawing.at(d)) continue;
      Segment s1{drawing.at(a), drawing.at(b)};
      Segment s2{drawing.at(c), drawing.at(d)};
      IntersectKind k = classify_intersection(s1, s2);
      bool share_vertex = a == c || a == d || b == c || b == d;
      bool ok;
      if (share_vertex) {
        // The common vertex point is always a shared endpoint; anything more
        // than that single touching point is a conflict.
        ok = k == IntersectKind::SHARED_ENDPOINT_ONLY;
      } else {
        ok = k == IntersectKind::DISJOINT;
      }
      if (!ok) add(ViolationKind::EDGE_PAIR_CONFLICT, {a, b, c, d});
    }
  }

  // (f) vertex interior to a non-incident edge
  for (const auto& v : g.vertex_ids) {
    for (const auto& [a, b] : g.edges) {
      if (v == a || v == b) continue;
      if (drawing.at(a) == drawing.at(b)) continue;
      if (point_in_segment_interior(drawing.at(v), {drawing.at(a), drawing.at(b)}))
        add(ViolationKind::VERTEX_ON_EDGE, {v, a, b});
    }
  }

  // (g) rotation system, up to cyclic rotation but not reflection
  if (g.has_rotation() && report.violations.empty()) {
    for (const auto& [v, prescribed] : g.rotation) {
      if (prescribed.size() < 3) continue;  // any cyclic order of <3 matches
      auto actual = angular_order(drawing, v, g);
      if (!detail::cyclically_equal(actual, prescribed))
        add(ViolationKind::ROTATION_MISMATCH, {v});
    }
  }

  report.verdict = report.violations.empty();
  return report;
}

}  // namespace gip
