#pragma once

#include "gip/incidence.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <map>
#include <vector>

namespace gip {

// Plain undirected graph on nodes 0..n-1.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

enum class KuratowskiKind { K5, K33 };

struct PlanarityResult {
  bool planar = false;
  // planar: rotation[v] = neighbors of v in embedding order
  std::vector<std::vector<std::size_t>> rotation;
  // nonplanar: a Kuratowski subdivision witness
  KuratowskiKind witness_kind = KuratowskiKind::K5;
  std::vector<std::pair<std::size_t, std::size_t>> witness_edges;
};

// Linear-time planarity test (Boyer-Myrvold). On success yields a
// combinatorial embedding, on failure a K5 or K3,3 subdivision witness.
inline PlanarityResult check_planarity(const SimpleGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::no_property, boost::property<boost::edge_index_t, int>>;
  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;

  BoostGraph bg(g.n);
  for (auto [a, b] : g.edges) boost::add_edge(a, b, bg);
  auto e_index = boost::get(boost::edge_index, bg);
  int ei = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(e_index, *it, ei++);

  std::vector<std::vector<Edge>> embedding(g.n);
  std::vector<Edge> kuratowski;

  PlanarityResult result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (result.planar) {
    result.rotation.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v)
      for (const auto& e : embedding[v]) {
        std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
        result.rotation[v].push_back(s == v ? t : s);
      }
  } else {
    std::vector<std::size_t> deg(g.n, 0);
    for (const auto& e : kuratowski) {
      std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
      result.witness_edges.push_back({s, t});
      ++deg[s];
      ++deg[t];
    }
    // Branch vertices of a K5 subdivision have degree 4; K3,3 gives six of
    // degree 3 and none of degree 4.
    bool any4 = false;
    for (auto d : deg) any4 |= d >= 4;
    result.witness_kind = any4 ? KuratowskiKind::K5 : KuratowskiKind::K33;
  }
  return result;
}

inline SimpleGraph to_simple_graph(const IncidenceGraph& g) {
  return {g.node_count(), g.as_node_edges()};
}

inline PlanarityResult check_planarity(const IncidenceGraph& g) {
  return check_planarity(to_simple_graph(g));
}

}  // namespace gip
