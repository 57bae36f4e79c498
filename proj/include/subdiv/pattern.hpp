#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/families.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/iso.hpp"
#include "subdiv/limits.hpp"

namespace subdiv {

/// The small graph F being counted or subdivided. Edges are kept in
/// lexicographic order; path systems of witnesses are indexed the same way.
class Pattern {
public:
  Pattern() = default;

  static Pattern from_graph(Graph g, std::string label = {}, const Limits &limits = {}) {
    if (g.order() < 1) throw DomainError("pattern must have at least one vertex");
    detail::require_small(g, limits.pattern_max_order);
    Pattern p;
    p.automorphisms_ = automorphism_count(g, limits);
    p.edges_ = g.edges();
    p.graph_ = std::move(g);
    p.label_ = std::move(label);
    return p;
  }

  static Pattern complete(int l) { return from_graph(complete_graph(l), "K" + std::to_string(l)); }
  /// K_l^-: the missing pair is {l-2, l-1}.
  static Pattern complete_minus(int l) {
    if (l < 2) throw DomainError("K_l^- needs l >= 2");
    return from_graph(complete_minus_edge(l), "K" + std::to_string(l) + "-");
  }
  static Pattern cycle(int n) { return from_graph(cycle_graph(n), "C" + std::to_string(n)); }
  static Pattern path(int n) { return from_graph(path_graph(n), "P" + std::to_string(n)); }
  static Pattern star(int leaves) { return from_graph(star_graph(leaves), "K1," + std::to_string(leaves)); }

  /// Built-in names: kN, kN-, cN, pN (path on N vertices), starN (K_{1,N}).
  static Pattern named(std::string_view name);

  const Graph &graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  int size() const noexcept { return graph_.size(); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  int degree(int v) const { return graph_.degree(v); }
  std::uint64_t automorphisms() const noexcept { return automorphisms_; }
  const std::string &label() const noexcept { return label_; }
  bool is_complete() const { return graph_.is_complete(); }

  /// Index of edge {i,j} in edges(), or -1.
  int edge_index(int i, int j) const {
    const Edge e(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
  }

  /// Label when set, otherwise "<n>:<u>-<v>,..." over the stored edges.
  std::string name() const {
    if (!label_.empty()) return label_;
    std::string s = std::to_string(order()) + ":";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v);
    }
    return s;
  }

  friend bool operator==(const Pattern &a, const Pattern &b) { return a.graph_ == b.graph_; }

private:
  Graph graph_;
  std::vector<Edge> edges_;
  std::string label_;
  std::uint64_t automorphisms_ = 1;
};

namespace detail {

inline bool parse_suffix_int(std::string_view s, int &out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

} // namespace detail

inline Pattern Pattern::named(std::string_view raw) {
  const std::string name = detail::lowercase(raw);
  int n = 0;
  auto fail = [&]() -> Pattern { throw DomainError("unknown pattern name '" + std::string(raw) + "'"); };
  if (name.starts_with("star")) {
    if (!detail::parse_suffix_int(std::string_view(name).substr(4), n) || n < 1) return fail();
    return star(n);
  }
  if (name.size() < 2) return fail();
  const char head = name[0];
  std::string_view tail = std::string_view(name).substr(1);
  if (head == 'k' && tail.ends_with('-')) {
    if (!detail::parse_suffix_int(tail.substr(0, tail.size() - 1), n) || n < 2) return fail();
    return complete_minus(n);
  }
  if (!detail::parse_suffix_int(tail, n)) return fail();
  switch (head) {
  case 'k':
    if (n < 1) return fail();
    return complete(n);
  case 'c':
    if (n < 3) return fail();
    return cycle(n);
  case 'p':
    if (n < 1) return fail();
    return path(n);
  default:
    return fail();
  }
}

/// Short human-readable name for a small graph: K<n>, K<n>-, C<n>, P<n>,
/// K1,<k> when it is one of those, otherwise "<n>:<edge list>" of the
/// canonical relabelling.
inline std::string describe_small_graph(const Graph &g, const Limits &limits = {}) {
  const int n = g.order();
  const auto form = canonical_form(g, limits);
  auto same = [&](const Graph &h) { return h.order() == n && h.size() == g.size() && canonical_form(h, limits) == form; };
  if (same(complete_graph(n))) return "K" + std::to_string(n);
  if (n >= 2 && same(complete_minus_edge(n))) return "K" + std::to_string(n) + "-";
  if (n >= 3 && same(cycle_graph(n))) return "C" + std::to_string(n);
  if (n >= 1 && same(path_graph(n))) return "P" + std::to_string(n);
  if (n >= 4 && same(star_graph(n - 1))) return "K1," + std::to_string(n - 1);
  const Graph c = canonical_graph(g, limits);
  std::string s = std::to_string(n) + ":";
  const auto edges = c.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
  }
  return s;
}

/// Which subgraphs F' of F count: induced ones F[S], or every edge subset of
/// every F[S].
enum class SubgraphKind { induced, all };

/// One representative per isomorphism class of subgraphs F' of F with
/// |F'| >= min_vertices (and at least one edge when require_edge). Ordered by
/// vertex count descending, then edge count descending, then canonical code.
inline std::vector<Pattern> subgraph_classes(const Pattern &f, int min_vertices, bool require_edge,
                                             SubgraphKind kind = SubgraphKind::all, const Limits &limits = {}) {
  const Graph &g = f.graph();
  const int n = g.order();
  if (min_vertices > n) throw DomainError("min_vertices exceeds pattern order");
  if (min_vertices < 0) min_vertices = 0;

  struct Key {
    CanonicalForm form;
    bool operator<(const Key &o) const {
      if (form.n != o.form.n) return form.n > o.form.n;
      if (form.m != o.form.m) return form.m > o.form.m;
      return form.code < o.form.code;
    }
  };
  std::map<Key, Graph> classes;

  for (Mask vs = 0; vs < (Mask{1} << n); ++vs) {
    if (popcount(vs) < min_vertices || vs == 0) continue;
    const VertexSet s = VertexSet::from_mask(vs);
    const Graph sub = induced_subgraph(g, s);
    const auto sub_edges = sub.edges();
    const int m = static_cast<int>(sub_edges.size());
    if (kind == SubgraphKind::induced) {
      if (require_edge && m == 0) continue;
      Key key{canonical_form(sub, limits)};
      if (!classes.contains(key)) classes.emplace(key, canonical_graph(sub, limits));
      continue;
    }
    if (m > limits.subgraph_class_max_edges)
      throw CapExceeded("subgraph_classes: " + std::to_string(m) + " edges in a vertex subset exceeds cap " +
                        std::to_string(limits.subgraph_class_max_edges));
    for (std::uint64_t es = 0; es < (std::uint64_t{1} << m); ++es) {
      if (require_edge && es == 0) continue;
      std::vector<Edge> chosen;
      for (int i = 0; i < m; ++i)
        if ((es >> i) & 1U) chosen.push_back(sub_edges[static_cast<std::size_t>(i)]);
      Graph h = Graph::from_edges(sub.order(), chosen);
      Key key{canonical_form(h, limits)};
      if (!classes.contains(key)) classes.emplace(key, canonical_graph(h, limits));
    }
  }

  std::vector<Pattern> out;
  out.reserve(classes.size());
  for (auto &[key, h] : classes) {
    std::string label = describe_small_graph(h, limits);
    out.push_back(Pattern::from_graph(std::move(h), std::move(label), limits));
  }
  return out;
}

/// Largest clique order in a small graph.
inline int clique_number(const Graph &g) {
  const int n = g.order();
  int best = n > 0 ? 1 : 0;
  std::vector<int> stack;
  auto grow = [&](auto &&self, VertexBits cand, int size) -> void {
    best = std::max(best, size);
    if (size + cand.count() <= best) return;
    std::vector<int> vs;
    cand.for_each([&](int v) { vs.push_back(v); });
    for (int v : vs) {
      cand.reset(v);
      VertexBits next = cand;
      next &= g.row(v);
      self(self, next, size + 1);
    }
  };
  VertexBits all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  grow(grow, all, 0);
  return best;
}

} // namespace subdiv
