#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/bits.hpp"
#include "subdiv/errors.hpp"

namespace subdiv {

/// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Canonical sorted set of vertex indices. Equal sets have equal
/// representations, so it can be used directly as a map key.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}
  explicit VertexSet(std::vector<int> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
      throw DomainError("vertex set contains a repeated vertex");
  }

  static VertexSet from_mask(Mask m) {
    VertexSet s;
    s.items_ = bits_to_vector(m);
    return s;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(int v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  int operator[](std::size_t i) const { return items_[i]; }
  const std::vector<int> &items() const noexcept { return items_; }

  /// Position of v in canonical order, or -1.
  int index_of(int v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    return (it != items_.end() && *it == v) ? static_cast<int>(it - items_.begin()) : -1;
  }

  Mask to_mask() const {
    Mask m = 0;
    for (int v : items_) m |= bit(v);
    return m;
  }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;
  friend auto operator<=>(const VertexSet &a, const VertexSet &b) {
    return a.items_ <=> b.items_;
  }

private:
  std::vector<int> items_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
public:
  Graph() = default;

  /// Builds a graph, rejecting self-loops, repeated edges and out-of-range
  /// endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw DomainError("negative vertex count");
    Graph g(n);
    for (const Edge &e : edges) {
      if (e.u < 0 || e.v >= n)
        throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} out of range for n=" + std::to_string(n));
      if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
      if (g.rows_[static_cast<std::size_t>(e.u)].test(e.v))
        throw DomainError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      g.link(e.u, e.v);
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_edges(int n, const std::vector<Edge> &edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  static Graph empty(int n) { return Graph(n); }

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  int max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
  }
  const VertexBits &row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  /// Neighbourhood as a 64-bit mask; requires order() <= 64.
  Mask neighbor_mask(int v) const { return rows_[static_cast<std::size_t>(v)].first_word(); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    rows_[static_cast<std::size_t>(v)].for_each([&](int w) { out.push_back(w); });
    return out;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](int w) {
        if (w > u) out.emplace_back(u, w);
      });
    return out;
  }

  bool has_vertex(int v) const noexcept { return v >= 0 && v < n_; }

  /// Copy with one extra edge.
  Graph with_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v || adjacent(u, v))
      throw DomainError("cannot add edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  bool is_complete() const { return 2 * static_cast<long long>(m_) == static_cast<long long>(n_) * (n_ - 1); }

  friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
  explicit Graph(int n)
      : n_(n), rows_(static_cast<std::size_t>(n), VertexBits(n)), degrees_(static_cast<std::size_t>(n), 0) {}

  void link(int u, int v) {
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    ++m_;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexBits> rows_;
  std::vector<int> degrees_;
};

/// G[S], relabelled 0..|S|-1 following S's canonical order.
inline Graph induced_subgraph(const Graph &g, const VertexSet &s) {
  for (int v : s)
    if (!g.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  std::vector<Edge> edges;
  const auto &items = s.items();
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (g.adjacent(items[i], items[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(items.size()), edges);
}

inline VertexSet all_vertices(const Graph &g) {
  std::vector<int> vs(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) vs[static_cast<std::size_t>(i)] = i;
  return VertexSet(std::move(vs));
}

} // namespace subdiv
