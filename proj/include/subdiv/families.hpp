#pragma once

#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"

namespace subdiv {

inline Graph complete_graph(int r) {
  if (r < 0) throw DomainError("complete_graph: r must be nonnegative");
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(r, edges);
}

/// K_{r,s}: left side 0..r-1, right side r..r+s-1.
inline Graph complete_bipartite(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("complete_bipartite: sides must be nonnegative");
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
  return Graph::from_edges(r + s, edges);
}

/// K_r minus the edge {r-2, r-1}.
inline Graph complete_minus_edge(int r) {
  if (r < 2) throw DomainError("complete_minus_edge: r must be at least 2");
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v)
      if (!(u == r - 2 && v == r - 1)) edges.emplace_back(u, v);
  return Graph::from_edges(r, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

/// Path on n vertices.
inline Graph path_graph(int n) {
  if (n < 1) throw DomainError("path_graph: n must be at least 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

/// K_{1,leaves} with centre 0.
inline Graph star_graph(int leaves) {
  if (leaves < 0) throw DomainError("star_graph: leaves must be nonnegative");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

} // namespace subdiv
