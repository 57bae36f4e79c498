#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/bits.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/limits.hpp"
#include "subdiv/parallel.hpp"
#include "subdiv/pattern.hpp"

namespace subdiv {

enum class AnchorKind { edge, vertex };

/// An edge {u,v} (u < v) or a single vertex u.
struct Anchor {
  AnchorKind kind = AnchorKind::edge;
  int u = 0;
  int v = -1;

  static Anchor edge(int a, int b) { return {AnchorKind::edge, std::min(a, b), std::max(a, b)}; }
  static Anchor vertex(int a) { return {AnchorKind::vertex, a, -1}; }

  friend auto operator<=>(const Anchor &, const Anchor &) = default;
};

/// Whether a copy must be a subgraph of G (the default) or an induced one.
enum class CopySemantics { subgraph, induced };

namespace detail {

/// Counts injective homomorphisms F -> G (edge-preserving; also
/// non-edge-preserving in induced mode) with some F-vertices pinned.
class EmbeddingCounter {
public:
  EmbeddingCounter(const Graph &host, const Graph &pattern, CopySemantics semantics)
      : g_(host), f_(pattern), induced_(semantics == CopySemantics::induced) {}

  std::uint64_t count(const std::vector<std::pair<int, int>> &pins) {
    const int l = f_.order();
    if (l > g_.order()) return 0;
    plan(pins);
    image_.assign(static_cast<std::size_t>(l), -1);
    used_ = VertexBits(g_.order());
    scratch_.assign(static_cast<std::size_t>(l), VertexBits(g_.order()));
    total_ = 0;
    extend(0);
    return total_;
  }

private:
  void plan(const std::vector<std::pair<int, int>> &pins) {
    const int l = f_.order();
    order_.clear();
    forced_.assign(static_cast<std::size_t>(l), -1);
    std::vector<bool> placed(static_cast<std::size_t>(l), false);
    for (auto [fv, gv] : pins) {
      order_.push_back(fv);
      forced_[static_cast<std::size_t>(fv)] = gv;
      placed[static_cast<std::size_t>(fv)] = true;
    }
    while (static_cast<int>(order_.size()) < l) {
      int best = -1;
      int best_links = -1;
      for (int f = 0; f < l; ++f) {
        if (placed[static_cast<std::size_t>(f)]) continue;
        int links = 0;
        for (int p : order_)
          if (f_.adjacent(f, p)) ++links;
        if (best < 0 || links > best_links || (links == best_links && f_.degree(f) > f_.degree(best))) {
          best = f;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed[static_cast<std::size_t>(best)] = true;
    }
    back_edges_.assign(static_cast<std::size_t>(l), {});
    back_non_edges_.assign(static_cast<std::size_t>(l), {});
    for (int d = 0; d < l; ++d)
      for (int e = 0; e < d; ++e) {
        const int a = order_[static_cast<std::size_t>(d)];
        const int b = order_[static_cast<std::size_t>(e)];
        (f_.adjacent(a, b) ? back_edges_ : back_non_edges_)[static_cast<std::size_t>(d)].push_back(b);
      }
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      add(1);
      return;
    }
    const int fv = order_[depth];
    VertexBits &cand = scratch_[depth];
    cand = VertexBits(g_.order());
    for (int v = 0; v < g_.order(); ++v) cand.set(v);
    cand.subtract(used_);
    for (int b : back_edges_[depth]) cand &= g_.row(image_[static_cast<std::size_t>(b)]);
    if (induced_)
      for (int b : back_non_edges_[depth]) cand.subtract(g_.row(image_[static_cast<std::size_t>(b)]));
    const int forced = forced_[static_cast<std::size_t>(fv)];
    if (forced >= 0) {
      if (!cand.test(forced)) return;
      place(depth, fv, forced);
      return;
    }
    if (depth + 1 == order_.size()) {
      add(static_cast<std::uint64_t>(cand.count()));
      return;
    }
    std::vector<int> options;
    cand.for_each([&](int v) { options.push_back(v); });
    for (int v : options) place(depth, fv, v);
  }

  void place(std::size_t depth, int fv, int gv) {
    image_[static_cast<std::size_t>(fv)] = gv;
    used_.set(gv);
    extend(depth + 1);
    used_.reset(gv);
    image_[static_cast<std::size_t>(fv)] = -1;
  }

  void add(std::uint64_t k) {
    if (total_ > std::numeric_limits<std::uint64_t>::max() - k) throw CapExceeded("embedding count overflows 64 bits");
    total_ += k;
  }

  const Graph &g_;
  const Graph &f_;
  bool induced_;
  std::vector<int> order_;
  std::vector<int> forced_;
  std::vector<std::vector<int>> back_edges_;
  std::vector<std::vector<int>> back_non_edges_;
  std::vector<int> image_;
  VertexBits used_;
  std::vector<VertexBits> scratch_;
  std::uint64_t total_ = 0;
};

inline void check_anchor(const Graph &g, const Pattern &f, const Anchor &a) {
  if (a.kind == AnchorKind::edge) {
    if (!g.has_vertex(a.u) || !g.has_vertex(a.v) || a.u == a.v || !g.adjacent(a.u, a.v))
      throw DomainError("anchor {" + std::to_string(a.u) + "," + std::to_string(a.v) + "} is not an edge of G");
    if (f.size() == 0) throw DomainError("pattern has no edges, so no copy can contain an edge anchor");
  } else if (!g.has_vertex(a.u)) {
    throw DomainError("anchor vertex " + std::to_string(a.u) + " is not in G");
  }
}

} // namespace detail

/// Number of distinct copies of F in G (subgraphs isomorphic to F, or induced
/// subgraphs in induced mode) whose edge set contains the anchor edge, or
/// whose vertex set contains the anchor vertex.
///
/// Every copy is the image of exactly |Aut(F)| embeddings, and an embedding
/// whose image contains the anchor edge maps exactly one F-edge onto it in
/// exactly one orientation; so the copy count is the sum over oriented
/// F-edges of the pinned embedding counts, divided by |Aut(F)|.
inline std::uint64_t count_copies_anchored(const Graph &g, const Pattern &f, const Anchor &anchor,
                                           CopySemantics semantics = CopySemantics::subgraph) {
  detail::check_anchor(g, f, anchor);
  detail::EmbeddingCounter counter(g, f.graph(), semantics);
  std::uint64_t embeddings = 0;
  if (anchor.kind == AnchorKind::edge) {
    for (const Edge &e : f.edges()) {
      embeddings += counter.count({{e.u, anchor.u}, {e.v, anchor.v}});
      embeddings += counter.count({{e.u, anchor.v}, {e.v, anchor.u}});
    }
  } else {
    for (int i = 0; i < f.order(); ++i) embeddings += counter.count({{i, anchor.u}});
  }
  if (embeddings % f.automorphisms() != 0)
    throw Error("internal: anchored embedding count not divisible by |Aut(F)|");
  return embeddings / f.automorphisms();
}

/// Total number of copies of F in G.
inline std::uint64_t count_copies(const Graph &g, const Pattern &f, CopySemantics semantics = CopySemantics::subgraph) {
  detail::EmbeddingCounter counter(g, f.graph(), semantics);
  return counter.count({}) / f.automorphisms();
}

struct ClassMinimum {
  std::string name;
  std::uint64_t count = 0;
};

/// Per-anchor copy counts and their minimum t.
struct DensityReport {
  AnchorKind anchor_kind = AnchorKind::edge;
  std::vector<std::pair<Anchor, std::uint64_t>> per_anchor;
  std::uint64_t min_count = 0;
  Anchor argmin;
  std::optional<int> k;
  std::optional<std::vector<ClassMinimum>> per_class;

  bool dense(std::uint64_t t) const { return min_count >= t; }
};

/// Edges of G, or its non-isolated vertices.
inline std::vector<Anchor> anchors_of(const Graph &g, AnchorKind kind) {
  std::vector<Anchor> out;
  if (kind == AnchorKind::edge) {
    for (const Edge &e : g.edges()) out.push_back(Anchor::edge(e.u, e.v));
  } else {
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) out.push_back(Anchor::vertex(v));
  }
  return out;
}

namespace detail {

inline void finish_report(DensityReport &r) {
  auto it = std::min_element(r.per_anchor.begin(), r.per_anchor.end(),
                             [](const auto &a, const auto &b) { return a.second < b.second; });
  r.min_count = it->second;
  r.argmin = it->first;
}

inline std::vector<Anchor> require_anchors(const Graph &g, AnchorKind kind) {
  auto anchors = anchors_of(g, kind);
  if (anchors.empty())
    throw DomainError(kind == AnchorKind::edge ? "graph has no edges to anchor on"
                                               : "graph has no non-isolated vertices to anchor on");
  return anchors;
}

} // namespace detail

/// (F,t)-local density report: G is (F,t)-locally dense iff min_count >= t.
inline DensityReport local_density(const Graph &g, const Pattern &f, AnchorKind kind = AnchorKind::edge,
                                   const Limits &limits = {}) {
  const auto anchors = detail::require_anchors(g, kind);
  DensityReport r;
  r.anchor_kind = kind;
  r.per_anchor.resize(anchors.size());
  parallel_for(anchors.size(), limits.threads, [&](std::size_t i) {
    r.per_anchor[i] = {anchors[i], count_copies_anchored(g, f, anchors[i])};
  });
  detail::finish_report(r);
  return r;
}

/// (F,k,t)-local density: every anchor must lie in at least t copies of every
/// subgraph F' of F with |F'| >= k and at least one edge. F' ranges over
/// induced subgraphs by default, which makes k = |F| coincide with plain
/// (F,t)-density. per_class holds the minimum over anchors for each class;
/// per_anchor the minimum over classes.
inline DensityReport k_local_density(const Graph &g, const Pattern &f, int k, AnchorKind kind = AnchorKind::edge,
                                     const Limits &limits = {}, SubgraphKind subgraphs = SubgraphKind::induced) {
  if (k < 3 || k > f.order())
    throw DomainError("k must satisfy 3 <= k <= |F|, got k=" + std::to_string(k));
  const auto anchors = detail::require_anchors(g, kind);
  const auto classes = subgraph_classes(f, k, true, subgraphs, limits);
  std::vector<std::vector<std::uint64_t>> counts(classes.size(), std::vector<std::uint64_t>(anchors.size()));
  parallel_for(classes.size() * anchors.size(), limits.threads, [&](std::size_t idx) {
    const std::size_t c = idx / anchors.size();
    const std::size_t a = idx % anchors.size();
    counts[c][a] = count_copies_anchored(g, classes[c], anchors[a]);
  });
  DensityReport r;
  r.anchor_kind = kind;
  r.k = k;
  r.per_class.emplace();
  for (std::size_t c = 0; c < classes.size(); ++c)
    r.per_class->push_back({classes[c].name(), *std::min_element(counts[c].begin(), counts[c].end())});
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t c = 0; c < classes.size(); ++c) least = std::min(least, counts[c][a]);
    r.per_anchor.emplace_back(anchors[a], least);
  }
  detail::finish_report(r);
  return r;
}

struct DensityVerdict {
  bool dense = false;
  DensityReport report;
};

inline DensityVerdict is_locally_dense(const Graph &g, const Pattern &f, std::uint64_t t, std::optional<int> k = {},
                                       AnchorKind kind = AnchorKind::edge, const Limits &limits = {},
                                       SubgraphKind subgraphs = SubgraphKind::induced) {
  if (t < 1) throw DomainError("t must be at least 1");
  DensityVerdict v;
  v.report = k ? k_local_density(g, f, *k, kind, limits, subgraphs) : local_density(g, f, kind, limits);
  v.dense = v.report.dense(t);
  return v;
}

} // namespace subdiv
