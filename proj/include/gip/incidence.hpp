#pragma once

#include "gip/formula.hpp"

#include <set>

namespace gip {

// Bipartite variable-constraint incidence graph. Node indexing is
// deterministic: variables first (formula order), then constraints.
// Repeated operands collapse to a single edge.
struct IncidenceGraph {
  std::vector<VarId> var_nodes;
  std::size_t constraint_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (var index, constraint index)

  std::size_t node_count() const { return var_nodes.size() + constraint_count; }
  std::size_t constraint_node(std::size_t ci) const { return var_nodes.size() + ci; }

  std::vector<std::pair<std::size_t, std::size_t>> as_node_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges.size());
    for (auto [v, c] : edges) out.push_back({v, constraint_node(c)});
    return out;
  }
};

inline IncidenceGraph incidence_graph(const Formula& f) {
  IncidenceGraph g;
  g.var_nodes = f.variables;
  g.constraint_count = f.constraints.size();
  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < f.variables.size(); ++i) index[f.variables[i]] = i;
  for (std::size_t c = 0; c < f.constraints.size(); ++c) {
    std::set<VarId> distinct(f.constraints[c].operands.begin(),
                             f.constraints[c].operands.end());
    for (const auto& v : distinct) g.edges.push_back({index.at(v), c});
  }
  return g;
}

}  // namespace gip
