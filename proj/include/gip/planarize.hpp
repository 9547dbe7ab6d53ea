#pragma once

#include "gip/incidence.hpp"
#include "gip/planarity.hpp"
#include "gip/polygon.hpp"

#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gip {

// ---------------------------------------------------------------------------
// Equality splitting

inline Formula split_equalities(const Formula& f) {
  Formula out = f;
  out.constraints.clear();
  for (const auto& c : f.constraints) {
    switch (c.kind) {
      case ConstraintKind::ADD_EQ:
        out.constraints.push_back({ConstraintKind::ADD_LEQ, c.operands});
        out.constraints.push_back({ConstraintKind::ADD_GEQ, c.operands});
        break;
      case ConstraintKind::INV_EQ:
        out.constraints.push_back({ConstraintKind::INV_LEQ, c.operands});
        out.constraints.push_back({ConstraintKind::INV_GEQ, c.operands});
        break;
      default:
        out.constraints.push_back(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// General-position straight-line drawing of the incidence graph

struct GeneralPositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneralPositionDrawing {
  std::vector<Point> node_points;                            // by incidence node index
  std::vector<std::pair<std::size_t, std::size_t>> edges;    // node index pairs (var, constraint)
};

namespace detail {

inline bool general_position_ok(const GeneralPositionDrawing& d) {
  const auto& pts = d.node_points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  auto seg = [&](std::size_t e) {
    return Segment{pts[d.edges[e].first], pts[d.edges[e].second]};
  };
  // No node on a non-incident edge.
  for (std::size_t v = 0; v < pts.size(); ++v)
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      if (d.edges[e].first == v || d.edges[e].second == v) continue;
      if (point_on_segment(pts[v], seg(e))) return false;
    }
  // Pairwise: adjacent edges share exactly their endpoint, others are
  // disjoint or properly crossing; collect crossing points.
  std::vector<std::pair<Point, std::pair<std::size_t, std::size_t>>> crossings;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (std::size_t g = e + 1; g < d.edges.size(); ++g) {
      bool adjacent = d.edges[e].first == d.edges[g].first ||
                      d.edges[e].first == d.edges[g].second ||
                      d.edges[e].second == d.edges[g].first ||
                      d.edges[e].second == d.edges[g].second;
      IntersectKind k = classify_intersection(seg(e), seg(g));
      if (adjacent) {
        if (k != IntersectKind::SHARED_ENDPOINT_ONLY) return false;
      } else if (k == IntersectKind::PROPER_CROSSING) {
        crossings.push_back({crossing_point(seg(e), seg(g)), {e, g}});
      } else if (k != IntersectKind::DISJOINT) {
        return false;
      }
    }
  }
  // No three edges through a common point.
  for (std::size_t i = 0; i < crossings.size(); ++i)
    for (std::size_t j = i + 1; j < crossings.size(); ++j)
      if (crossings[i].first == crossings[j].first) return false;
  return true;
}

}  // namespace detail

// Nodes on a convex arc, then seed-deterministic rational perturbation with
// bounded denominators; exact general-position checks with bounded retries.
inline GeneralPositionDrawing draw_general_position(const IncidenceGraph& g,
                                                    std::uint64_t seed) {
  GeneralPositionDrawing d;
  d.edges = g.as_node_edges();
  std::size_t n = g.node_count();
  std::mt19937_64 rng(seed);
  const long denom = 64 * static_cast<long>(n ? n * n : 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    d.node_points.clear();
    for (std::size_t i = 0; i < n; ++i) {
      // Convex arc (parabola) plus a small rational jitter.
      std::uniform_int_distribution<long> jitter(-denom / 4, denom / 4);
      Rational dx(jitter(rng), denom);
      Rational dy(jitter(rng), denom);
      d.node_points.push_back({Rational(long(i)) + dx,
                               Rational(long(i) * long(i)) + dy});
    }
    if (detail::general_position_ok(d)) return d;
  }
  throw GeneralPositionFailure("no general-position drawing after 64 attempts");
}

// ---------------------------------------------------------------------------
// Crossing enumeration

struct EdgeCrossing {
  std::size_t edge_a;
  std::size_t edge_b;
  Point where;
};

struct CrossingReport {
  std::vector<EdgeCrossing> crossings;
  // For each edge, crossing indices ordered along the edge starting at its
  // variable endpoint.
  std::vector<std::vector<std::size_t>> per_edge;
};

inline CrossingReport enumerate_crossings(const GeneralPositionDrawing& d) {
  CrossingReport report;
  report.per_edge.resize(d.edges.size());
  auto seg = [&](std::size_t e) {
    return Segment{d.node_points[d.edges[e].first], d.node_points[d.edges[e].second]};
  };
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    for (std::size_t g = e + 1; g < d.edges.size(); ++g)
      if (classify_intersection(seg(e), seg(g)) == IntersectKind::PROPER_CROSSING)
        report.crossings.push_back({e, g, crossing_point(seg(e), seg(g))});
  for (std::size_t c = 0; c < report.crossings.size(); ++c) {
    report.per_edge[report.crossings[c].edge_a].push_back(c);
    report.per_edge[report.crossings[c].edge_b].push_back(c);
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    Segment s = seg(e);  // a = variable endpoint
    auto& list = report.per_edge[e];
    std::sort(list.begin(), list.end(), [&](std::size_t i, std::size_t j) {
      return detail::segment_parameter(s, report.crossings[i].where) <
             detail::segment_parameter(s, report.crossings[j].where);
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Half-crossing and crossing gadgets

enum class HalfCrossingDirection { FORWARD, MIRROR };

struct HalfCrossing {
  VarId x_out;
  VarId y_out;
  VarId z1;
  VarId z2;
  std::array<Constraint, 4> constraints;
};

namespace detail {

class FreshNamer {
 public:
  explicit FreshNamer(std::set<VarId> taken) : taken_(std::move(taken)) {}

  VarId fresh(const std::string& base) {
    VarId name = base;
    while (taken_.count(name)) name += "_";
    taken_.insert(name);
    return name;
  }

 private:
  std::set<VarId> taken_;
};

// Emits the four sandwich constraints between given input and output wires.
//   FORWARD: x+y<=z1, z1<=x'+y, x'+y<=z2, z2<=x'+y'   (gives x<=x', y<=y')
//   MIRROR:  z1<=x+y, x'+y<=z1, x'+y<=z2 reversed ...  (gives x>=x', y>=y')
inline HalfCrossing emit_half_crossing(const VarId& x, const VarId& y, const VarId& xp,
                                       const VarId& yp, HalfCrossingDirection dir,
                                       FreshNamer& namer, const std::string& tag) {
  HalfCrossing hc;
  hc.x_out = xp;
  hc.y_out = yp;
  hc.z1 = namer.fresh(tag + "z1");
  hc.z2 = namer.fresh(tag + "z2");
  if (dir == HalfCrossingDirection::FORWARD) {
    hc.constraints = {Constraint{ConstraintKind::ADD_LEQ, {x, y, hc.z1}},
                      Constraint{ConstraintKind::ADD_GEQ, {xp, y, hc.z1}},
                      Constraint{ConstraintKind::ADD_LEQ, {xp, y, hc.z2}},
                      Constraint{ConstraintKind::ADD_GEQ, {xp, yp, hc.z2}}};
  } else {
    hc.constraints = {Constraint{ConstraintKind::ADD_GEQ, {x, y, hc.z1}},
                      Constraint{ConstraintKind::ADD_LEQ, {xp, y, hc.z1}},
                      Constraint{ConstraintKind::ADD_GEQ, {xp, y, hc.z2}},
                      Constraint{ConstraintKind::ADD_LEQ, {xp, yp, hc.z2}}};
  }
  return hc;
}

}  // namespace detail

// Spec-facing form: fresh continuation wires x', y' plus the sandwich.
inline HalfCrossing make_half_crossing(const VarId& x, const VarId& y,
                                       HalfCrossingDirection dir,
                                       const std::set<VarId>& taken,
                                       const std::string& tag = "hc_") {
  detail::FreshNamer namer(taken);
  VarId xp = namer.fresh(tag + x + "p");
  VarId yp = namer.fresh(tag + y + "p");
  return detail::emit_half_crossing(x, y, xp, yp, dir, namer, tag);
}

struct CrossingGadgetRecord {
  int crossing_id = 0;
  VarId x_in, y_in;    // wires entering the crossing
  VarId x_out, y_out;  // continuation wires (x'', y'')
  std::vector<VarId> fresh_vars;              // 14 per record
  std::vector<Constraint> fresh_constraints;  // 16 per record
};

// Diamond of four half-crossings enforcing x = x'' and y = y''. The two
// boxes on the x-monotone path give x <= t_x <= x''; their mirrors give
// x >= b_x >= x''; the y chains interleave through the same boxes, which is
// what lets the gadget embed with its four wire stubs alternating around the
// replaced crossing (x, y, x'', y'') -- the uncrossing itself.
inline CrossingGadgetRecord replace_crossing(int crossing_id, const VarId& x, const VarId& y,
                                             const VarId& x_out, const VarId& y_out,
                                             detail::FreshNamer& namer) {
  std::string tag = "cr" + std::to_string(crossing_id) + "_";
  CrossingGadgetRecord rec;
  rec.crossing_id = crossing_id;
  rec.x_in = x;
  rec.y_in = y;
  rec.x_out = x_out;
  rec.y_out = y_out;

  VarId tx = namer.fresh(tag + "tx");
  VarId ty = namer.fresh(tag + "ty");
  VarId bx = namer.fresh(tag + "bx");
  VarId by = namer.fresh(tag + "by");
  rec.fresh_vars = {tx, ty, bx, by, x_out, y_out};

  auto top1 = detail::emit_half_crossing(tx, y_out, x, ty, HalfCrossingDirection::MIRROR,
                                         namer, tag + "t1");  // x <= t_x, t_y <= y''
  auto top2 = detail::emit_half_crossing(tx, y_out, x_out, by, HalfCrossingDirection::FORWARD,
                                         namer, tag + "t2");  // t_x <= x'', b_y >= y''
  auto bot1 = detail::emit_half_crossing(bx, y, x, ty, HalfCrossingDirection::FORWARD, namer,
                                         tag + "b1");  // x >= b_x, y <= t_y
  auto bot2 = detail::emit_half_crossing(bx, y, x_out, by, HalfCrossingDirection::MIRROR,
                                         namer, tag + "b2");  // b_x >= x'', y >= b_y
  for (const auto* hc : {&top1, &top2, &bot1, &bot2}) {
    rec.fresh_vars.push_back(hc->z1);
    rec.fresh_vars.push_back(hc->z2);
    for (const auto& c : hc->constraints) rec.fresh_constraints.push_back(c);
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Range loosening

// Widens the range to [1/2,4] and, for each listed original variable x, adds
// a_x = 1, b_x = 1, a_x + b_x >= x so x stays effectively within [1/2,2].
inline Formula loosen_ranges(const Formula& f, const std::vector<VarId>& original_vars,
                             std::vector<std::pair<VarId, VarId>>* widgets = nullptr) {
  Formula out = f;
  out.lo = Rational(1, 2);
  out.hi = 4;
  detail::FreshNamer namer(std::set<VarId>(f.variables.begin(), f.variables.end()));
  for (const auto& x : original_vars) {
    VarId ax = namer.fresh("a_" + x);
    VarId bx = namer.fresh("b_" + x);
    out.variables.push_back(ax);
    out.variables.push_back(bx);
    out.constraints.push_back({ConstraintKind::CONST_ONE, {ax}});
    out.constraints.push_back({ConstraintKind::CONST_ONE, {bx}});
    out.constraints.push_back({ConstraintKind::ADD_GEQ, {ax, bx, x}});
    if (widgets) widgets->push_back({ax, bx});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Provenance

enum class VarOrigin { ORIGINAL, WIRE, HALF_Z, RANGE_WIDGET };

struct ProvenanceEntry {
  VarOrigin origin = VarOrigin::ORIGINAL;
  VarId source;   // WIRE: origin variable; HALF_Z: first port; RANGE_WIDGET: guarded var
  VarId source2;  // HALF_Z: second port
  int crossing = -1;
};

using Provenance = std::map<VarId, ProvenanceEntry>;

// Canonical extension of an assignment of the original variables to all
// planarizer-introduced variables (wires copy, sandwiches sit at the forced
// sum, widgets are 1). Requires entries to reference earlier variables only.
inline Assignment extend_assignment(const Formula& planar, const Provenance& prov,
                                    const Assignment& original) {
  Assignment full;
  for (const auto& v : planar.variables) {
    const auto& entry = prov.at(v);
    switch (entry.origin) {
      case VarOrigin::ORIGINAL: full[v] = original.at(v); break;
      case VarOrigin::WIRE: full[v] = full.at(entry.source); break;
      case VarOrigin::HALF_Z: full[v] = full.at(entry.source) + full.at(entry.source2); break;
      case VarOrigin::RANGE_WIDGET: full[v] = 1; break;
    }
  }
  return full;
}

// ---------------------------------------------------------------------------
// Full pipeline

struct PlanarizeResult {
  Formula formula;
  Provenance provenance;
  GeneralPositionDrawing drawing;   // of the split formula's incidence graph
  std::size_t crossing_count = 0;
};

// Crossing replacement over a given general-position drawing of the split
// formula's incidence graph; planarize() wraps it with the random drawing.
inline PlanarizeResult planarize_over_drawing(const Formula& split,
                                              const IncidenceGraph& inc,
                                              GeneralPositionDrawing drawing) {
  PlanarizeResult result;
  result.drawing = std::move(drawing);
  CrossingReport crossings = enumerate_crossings(result.drawing);
  result.crossing_count = crossings.crossings.size();

  Formula out;
  out.lo = split.lo;
  out.hi = split.hi;
  out.variables = split.variables;
  detail::FreshNamer namer(std::set<VarId>(split.variables.begin(), split.variables.end()));
  for (const auto& v : split.variables) result.provenance[v] = {VarOrigin::ORIGINAL, v, "", -1};

  // Chain variables per edge: crossing k along edge e consumes chain[e][k]
  // and emits chain[e][k+1]; the constraint endpoint finally reads the last.
  std::size_t edge_count = result.drawing.edges.size();
  std::vector<std::vector<VarId>> chain(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) {
    VarId origin = inc.var_nodes[result.drawing.edges[e].first];
    chain[e].push_back(origin);
    std::size_t k = crossings.per_edge[e].size();
    for (std::size_t i = 1; i <= k; ++i) {
      VarId w = namer.fresh(origin + "_w" + std::to_string(e) + "_" + std::to_string(i));
      chain[e].push_back(w);
      out.variables.push_back(w);
      result.provenance[w] = {VarOrigin::WIRE, origin, "", -1};
    }
  }

  // Emit one crossing gadget per crossing, wired through the chains.
  std::vector<std::size_t> chain_pos(edge_count, 0);
  std::vector<Constraint> gadget_constraints;
  for (std::size_t e = 0; e < edge_count; ++e) {
    for (std::size_t idx : crossings.per_edge[e]) {
      const auto& cr = crossings.crossings[idx];
      if (cr.edge_a != e) continue;  // emit once, from the lexicographically first edge
      std::size_t g = cr.edge_b;
      std::size_t pa = 0, pb = 0;
      for (std::size_t i = 0; i < crossings.per_edge[e].size(); ++i)
        if (crossings.per_edge[e][i] == idx) pa = i;
      for (std::size_t i = 0; i < crossings.per_edge[g].size(); ++i)
        if (crossings.per_edge[g][i] == idx) pb = i;
      auto rec = replace_crossing(static_cast<int>(idx), chain[e][pa], chain[g][pb],
                                  chain[e][pa + 1], chain[g][pb + 1], namer);
      for (const auto& v : rec.fresh_vars) {
        if (v == rec.x_out || v == rec.y_out) continue;  // chain vars already declared
        out.variables.push_back(v);
      }
      // Corner variables copy their wire's origin; sandwiches sit at sums.
      const auto& pv = result.provenance;
      VarId xo = pv.at(chain[e][pa]).origin == VarOrigin::ORIGINAL ? chain[e][pa]
                                                                   : pv.at(chain[e][pa]).source;
      VarId yo = pv.at(chain[g][pb]).origin == VarOrigin::ORIGINAL ? chain[g][pb]
                                                                   : pv.at(chain[g][pb]).source;
      for (std::size_t i = 0; i < 4; ++i)  // tx, ty, bx, by
        result.provenance[rec.fresh_vars[i]] = {VarOrigin::WIRE, i % 2 == 0 ? xo : yo, "",
                                                rec.crossing_id};
      for (std::size_t i = 6; i < rec.fresh_vars.size(); ++i) {
        const auto& c = rec.fresh_constraints[(i - 6) * 2];  // first constraint names z
        result.provenance[rec.fresh_vars[i]] = {VarOrigin::HALF_Z, c.operands[0], c.operands[1],
                                                rec.crossing_id};
      }
      for (const auto& c : rec.fresh_constraints) gadget_constraints.push_back(c);
    }
  }

  // Original constraints with operands rewired to the final chain variables.
  std::map<std::pair<VarId, std::size_t>, VarId> final_var;  // (var, constraint idx) -> wire end
  for (std::size_t e = 0; e < edge_count; ++e) {
    std::size_t ci = result.drawing.edges[e].second - inc.var_nodes.size();
    final_var[{inc.var_nodes[result.drawing.edges[e].first], ci}] = chain[e].back();
  }
  for (std::size_t ci = 0; ci < split.constraints.size(); ++ci) {
    Constraint c = split.constraints[ci];
    for (auto& operand : c.operands) {
      auto it = final_var.find({operand, ci});
      if (it != final_var.end()) operand = it->second;
    }
    out.constraints.push_back(c);
  }
  for (const auto& c : gadget_constraints) out.constraints.push_back(c);

  // Range loosening applies widgets to the original variables only.
  std::vector<std::pair<VarId, VarId>> widgets;
  Formula widened = loosen_ranges(out, split.variables, &widgets);
  for (std::size_t i = 0; i < widgets.size(); ++i) {
    result.provenance[widgets[i].first] = {VarOrigin::RANGE_WIDGET, split.variables[i], "", -1};
    result.provenance[widgets[i].second] = {VarOrigin::RANGE_WIDGET, split.variables[i], "", -1};
  }
  result.formula = std::move(widened);
  return result;
}

inline PlanarizeResult planarize(const Formula& f, std::uint64_t seed) {
  Formula split = split_equalities(f);
  IncidenceGraph inc = incidence_graph(split);
  return planarize_over_drawing(split, inc, draw_general_position(inc, seed));
}

// ---------------------------------------------------------------------------
// Provenance serialization (comment block readable back from formula text)

inline std::string serialize_planarized(const PlanarizeResult& r) {
  std::ostringstream out;
  out << serialize_formula(r.formula);
  out << "# provenance\n";
  for (const auto& v : r.formula.variables) {
    const auto& e = r.provenance.at(v);
    out << "# provenance " << v << " ";
    switch (e.origin) {
      case VarOrigin::ORIGINAL: out << "original"; break;
      case VarOrigin::WIRE: out << "wire " << e.source; break;
      case VarOrigin::HALF_Z: out << "halfz " << e.source << " " << e.source2; break;
      case VarOrigin::RANGE_WIDGET: out << "widget " << e.source; break;
    }
    out << "\n";
  }
  return out.str();
}

inline Provenance parse_provenance(const std::string& text) {
  Provenance prov;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string hash, tag, var, kind;
    ls >> hash >> tag;
    if (hash != "#" || tag != "provenance") continue;
    if (!(ls >> var >> kind)) continue;
    ProvenanceEntry e;
    if (kind == "original") e.origin = VarOrigin::ORIGINAL, e.source = var;
    else if (kind == "wire") e.origin = VarOrigin::WIRE, ls >> e.source;
    else if (kind == "halfz") e.origin = VarOrigin::HALF_Z, ls >> e.source >> e.source2;
    else if (kind == "widget") e.origin = VarOrigin::RANGE_WIDGET, ls >> e.source;
    else continue;
    prov[var] = e;
  }
  return prov;
}

}  // namespace gip
