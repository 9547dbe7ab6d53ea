#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gip {

using VertexId = std::string;

// Undirected graph with optional rotation system (cyclic neighbor order).
struct GipGraph {
  std::vector<VertexId> vertex_ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, std::vector<VertexId>> rotation;  // empty = absent

  bool has_rotation() const { return !rotation.empty(); }

  bool has_vertex(const VertexId& v) const {
    return std::find(vertex_ids.begin(), vertex_ids.end(), v) != vertex_ids.end();
  }

  std::vector<VertexId> neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges) {
      if (a == v) out.push_back(b);
      else if (b == v) out.push_back(a);
    }
    return out;
  }
};

inline std::vector<std::string> validate_graph(const GipGraph& g) {
  std::vector<std::string> defects;
  std::set<VertexId> verts(g.vertex_ids.begin(), g.vertex_ids.end());
  if (verts.size() != g.vertex_ids.size()) defects.push_back("duplicate vertex id");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [a, b] : g.edges) {
    if (a == b) defects.push_back("self-loop at " + a);
    if (!verts.count(a) || !verts.count(b)) defects.push_back("edge endpoint not a vertex");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) defects.push_back("multi-edge " + a + "-" + b);
  }
  if (g.has_rotation()) {
    for (const auto& [v, order] : g.rotation) {
      if (!verts.count(v)) {
        defects.push_back("rotation for unknown vertex " + v);
        continue;
      }
      auto nbrs = g.neighbors(v);
      std::multiset<VertexId> want(nbrs.begin(), nbrs.end());
      std::multiset<VertexId> got(order.begin(), order.end());
      if (want != got) defects.push_back("rotation at " + v + " does not list the neighbor set");
    }
    for (const auto& v : g.vertex_ids)
      if (!g.neighbors(v).empty() && !g.rotation.count(v))
        defects.push_back("rotation missing for vertex " + v);
  }
  return defects;
}

}  // namespace gip
