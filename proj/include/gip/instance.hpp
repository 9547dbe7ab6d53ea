#pragma once

#include "gip/graph.hpp"
#include "gip/polygon.hpp"

#include <map>
#include <string>
#include <vector>

namespace gip {

// Vertices pinned to boundary points of the region.
using FixedAssignment = std::map<VertexId, Point>;

struct GipInstance {
  PolygonalRegion region;
  GipGraph graph;
  FixedAssignment fixed;
};

// Candidate drawing: a position for every graph vertex.
using Drawing = std::map<VertexId, Point>;

enum class InstanceDefectKind {
  BAD_REGION,
  BAD_GRAPH,
  FIXED_UNKNOWN_VERTEX,
  FIXED_NOT_ON_BOUNDARY,
  DUPLICATE_FIXED_POINT,
};

struct InstanceDefect {
  InstanceDefectKind kind;
  std::string detail;
};

inline std::vector<InstanceDefect> validate_instance(const GipInstance& inst) {
  std::vector<InstanceDefect> defects;
  for (auto& d : validate_region(inst.region))
    defects.push_back({InstanceDefectKind::BAD_REGION, d});
  for (auto& d : validate_graph(inst.graph))
    defects.push_back({InstanceDefectKind::BAD_GRAPH, d});
  for (const auto& [v, p] : inst.fixed) {
    if (!inst.graph.has_vertex(v)) {
      defects.push_back({InstanceDefectKind::FIXED_UNKNOWN_VERTEX, v});
      continue;
    }
    if (point_in_region(inst.region, p) != RegionLocation::ON_BOUNDARY)
      defects.push_back({InstanceDefectKind::FIXED_NOT_ON_BOUNDARY, v});
  }
  for (auto a = inst.fixed.begin(); a != inst.fixed.end(); ++a) {
    auto b = a;
    for (++b; b != inst.fixed.end(); ++b)
      if (a->second == b->second)
        defects.push_back({InstanceDefectKind::DUPLICATE_FIXED_POINT, a->first + "," + b->first});
  }
  return defects;
}

}  // namespace gip
