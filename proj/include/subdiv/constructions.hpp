#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "subdiv/bigint.hpp"
#include "subdiv/bits.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/families.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

/// Clique A of size l-2 joined completely to an independent set B of size
/// t+1. A = {0..l-3}, B = {l-2..l+t-2}.
struct SplitGraph {
  Graph graph;
  VertexSet a;
  VertexSet b;
};

inline SplitGraph split_construction(int l, int t) {
  if (l < 4) throw DomainError("split_construction needs l >= 4");
  if (t < 1) throw DomainError("split_construction needs t >= 1");
  const int na = l - 2;
  const int n = na + t + 1;
  std::vector<Edge> edges;
  for (int u = 0; u < na; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  SplitGraph s;
  s.graph = Graph::from_edges(n, edges);
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (v < na ? a : b).push_back(v);
  s.a = VertexSet(std::move(a));
  s.b = VertexSet(std::move(b));
  return s;
}

/// Side length r = floor(d^2/8) of the complete bipartite graph K_{r,r}
/// without a subdivision of K_{d+1}.
inline long jung_r(long d) { return d * d / 8; }

/// Smallest r with binom(r-2, l-2) >= t.
inline int tuza_r_for(int l, long long t) {
  if (l < 3) throw DomainError("tuza_r_for needs l >= 3");
  if (t < 1) throw DomainError("tuza_r_for needs t >= 1");
  int r = l;
  while (binomial(r - 2, l - 2) < t) ++r;
  return r;
}

/// A = (a_1, ..., a_{l-2}, z): G[A] complete, A \ {z} complete to B, and
/// A, B disjoint.
struct BookStructure {
  std::vector<int> a;
  VertexSet b;

  int z() const { return a.back(); }
};

struct BookSearch {
  BookStructure book;
  /// g(e): copies of K_{l-1} containing the edge
  std::uint64_t cliques_on_edge = 0;
};

inline std::vector<std::string> book_violations(const Graph &g, const BookStructure &h) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < h.a.size(); ++i)
    for (std::size_t j = i + 1; j < h.a.size(); ++j)
      if (!g.adjacent(h.a[i], h.a[j]))
        out.push_back("A is not complete: " + std::to_string(h.a[i]) + " " + std::to_string(h.a[j]));
  for (int x : h.b) {
    if (std::find(h.a.begin(), h.a.end(), x) != h.a.end()) out.push_back("A and B share vertex " + std::to_string(x));
    for (std::size_t i = 0; i + 1 < h.a.size(); ++i)
      if (!g.adjacent(h.a[i], x))
        out.push_back("A\\{z} not complete to B: " + std::to_string(h.a[i]) + " " + std::to_string(x));
  }
  return out;
}

/// Over every copy J of K_{l-1} containing e and every z in J, takes
/// B(J,z) = {x outside J adjacent to all of J \ {z}} and returns the largest.
/// Ties go to the lexicographically smallest J, then the smallest z.
inline BookSearch find_book_structure(const Graph &g, Edge e, int l) {
  if (l < 3) throw DomainError("find_book_structure needs l >= 3");
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.adjacent(e.u, e.v))
    throw DomainError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge of G");
  VertexBits common = g.row(e.u);
  common &= g.row(e.v);
  std::vector<int> pool;
  common.for_each([&](int x) { pool.push_back(x); });

  // copies of K_{l-1} on e: e plus a clique of size l-3 in the common
  // neighbourhood
  std::vector<std::vector<int>> js;
  std::vector<int> chosen;
  auto grow = [&](auto &&self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == l - 3) {
      auto j = chosen;
      j.push_back(e.u);
      j.push_back(e.v);
      std::sort(j.begin(), j.end());
      js.push_back(std::move(j));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      bool ok = true;
      for (int y : chosen)
        if (!g.adjacent(y, pool[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(js.begin(), js.end());

  BookSearch best;
  best.cliques_on_edge = js.size();
  bool found = false;
  std::size_t best_size = 0;
  for (const auto &j : js)
    for (int z : j) {
      VertexBits cand(g.order());
      for (int x = 0; x < g.order(); ++x) cand.set(x);
      for (int y : j) {
        cand.reset(y);
        if (y != z) cand &= g.row(y);
      }
      const auto size = static_cast<std::size_t>(cand.count());
      if (found && size <= best_size) continue;
      found = true;
      best_size = size;
      std::vector<int> a;
      for (int y : j)
        if (y != z) a.push_back(y);
      a.push_back(z);
      std::vector<int> b;
      cand.for_each([&](int x) { b.push_back(x); });
      best.book = BookStructure{std::move(a), VertexSet(std::move(b))};
    }
  if (!found)
    throw DomainError("no copy of K_" + std::to_string(l - 1) + " contains {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "}");
  return best;
}

/// For every (l-2 choose 2)+1 subset X of B (lexicographic, at most `cap`),
/// the subdivision T(X) of K_l^- with vertex set A u X: branch vertices are A
/// (z playing pattern vertex l-2) plus x_l = min X; every pair i<j below l-2
/// is routed through its own vertex of X; all other pairs are direct edges.
inline std::vector<SubdivisionWitness> theorem_iii_family(const Graph &g, const BookStructure &h, int l,
                                                          std::optional<std::size_t> cap = {}) {
  if (l < 3) throw DomainError("theorem_iii_family needs l >= 3");
  if (static_cast<int>(h.a.size()) != l - 1) throw DomainError("book structure A must have l-1 vertices");
  if (auto v = book_violations(g, h); !v.empty()) throw DomainError("not a book structure: " + v.front());
  const int inner = (l - 2) * (l - 3) / 2;
  const int m = inner + 1;
  if (static_cast<int>(h.b.size()) < m)
    throw DomainError("|B| = " + std::to_string(h.b.size()) + " is below the required " + std::to_string(m));

  const Pattern pattern = Pattern::complete_minus(l);
  std::vector<SubdivisionWitness> out;
  const auto &b = h.b.items();
  std::vector<std::size_t> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  while (true) {
    if (cap && out.size() >= *cap) break;
    SubdivisionWitness w;
    w.pattern = pattern;
    w.branch = h.a;
    w.branch.push_back(b[idx[0]]);
    std::size_t next_inner = 1;
    for (const Edge &e : pattern.edges()) {
      const int x = w.branch[static_cast<std::size_t>(e.u)];
      const int y = w.branch[static_cast<std::size_t>(e.v)];
      if (e.v < l - 2)
        w.routes.push_back({x, b[idx[next_inner++]], y});
      else
        w.routes.push_back({x, y});
    }
    out.push_back(std::move(w));
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == b.size() - static_cast<std::size_t>(m - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < m; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

/// Name of the generator behind random_graph; bump when the edge rule changes.
inline constexpr const char *kRandomGraphGenerator = "mt19937_64/v1";

/// G(n,p): pairs u<v in lexicographic order, each drawing one mt19937_64
/// output; the pair is an edge iff the top 53 bits are below p * 2^53.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_graph: n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_graph: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

enum class ConstructionKind { split, complete, complete_bipartite, random };

/// Reproducible generator input.
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::complete;
  int l = 0;
  int t = 0;
  int r = 0;
  int s = 0;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    switch (kind) {
    case ConstructionKind::split:
      if (l < 4 || t < 1) throw DomainError("split needs ell >= 4 and t >= 1");
      break;
    case ConstructionKind::complete:
      if (r < 1) throw DomainError("complete needs r >= 1");
      break;
    case ConstructionKind::complete_bipartite:
      if (r < 1 || s < 1) throw DomainError("bipartite needs r, s >= 1");
      break;
    case ConstructionKind::random:
      if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw DomainError("random needs n >= 0 and 0 <= p <= 1");
      break;
    }
  }

  Graph build() const {
    validate();
    switch (kind) {
    case ConstructionKind::split:
      return split_construction(l, t).graph;
    case ConstructionKind::complete:
      return complete_graph(r);
    case ConstructionKind::complete_bipartite:
      return complete_bipartite(r, s);
    case ConstructionKind::random:
      return random_graph(n, p, seed);
    }
    return {};
  }

  friend bool operator==(const ConstructionSpec &, const ConstructionSpec &) = default;
};

namespace detail {

/// "name(a,b,...)" -> integer arguments, when the call shape matches.
inline std::optional<std::vector<std::string>> call_args(std::string_view text, std::string_view name) {
  if (!text.starts_with(name) || text.size() < name.size() + 2 || text[name.size()] != '(' || text.back() != ')')
    return std::nullopt;
  std::vector<std::string> args;
  std::string_view inner = text.substr(name.size() + 1, text.size() - name.size() - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    if (comma == std::string_view::npos) comma = inner.size();
    std::string arg(inner.substr(pos, comma - pos));
    arg.erase(std::remove(arg.begin(), arg.end(), ' '), arg.end());
    args.push_back(arg);
    pos = comma + 1;
  }
  return args;
}

inline int int_arg(const std::string &s, std::string_view what) {
  int v = 0;
  if (!parse_suffix_int(s, v)) throw DomainError("bad integer '" + s + "' in " + std::string(what));
  return v;
}

} // namespace detail

/// Built-in host names: kN, kN-, cN, pN, starN, split(l,t), kb(r,s),
/// random(n,p,seed). Returns nullopt when `name` is not one of them.
inline std::optional<Graph> named_graph(std::string_view raw) {
  const std::string name = detail::lowercase(raw);
  if (auto args = detail::call_args(name, "split")) {
    if (args->size() != 2) throw DomainError("split takes (l,t)");
    return split_construction(detail::int_arg((*args)[0], raw), detail::int_arg((*args)[1], raw)).graph;
  }
  if (auto args = detail::call_args(name, "kb")) {
    if (args->size() != 2) throw DomainError("kb takes (r,s)");
    return complete_bipartite(detail::int_arg((*args)[0], raw), detail::int_arg((*args)[1], raw));
  }
  if (auto args = detail::call_args(name, "random")) {
    if (args->size() != 3) throw DomainError("random takes (n,p,seed)");
    double p = 0;
    try {
      p = std::stod((*args)[1]);
    } catch (const std::exception &) {
      throw DomainError("bad probability in " + std::string(raw));
    }
    return random_graph(detail::int_arg((*args)[0], raw), p,
                        static_cast<std::uint64_t>(std::stoull((*args)[2])));
  }
  int n = 0;
  if (name.starts_with("star")) {
    if (!detail::parse_suffix_int(std::string_view(name).substr(4), n) || n < 1) return std::nullopt;
    return star_graph(n);
  }
  if (name.size() < 2) return std::nullopt;
  std::string_view tail = std::string_view(name).substr(1);
  if (name[0] == 'k' && tail.ends_with('-')) {
    if (!detail::parse_suffix_int(tail.substr(0, tail.size() - 1), n) || n < 2) return std::nullopt;
    return complete_minus_edge(n);
  }
  if (!detail::parse_suffix_int(tail, n)) return std::nullopt;
  if (name[0] == 'k' && n >= 1) return complete_graph(n);
  if (name[0] == 'c' && n >= 3) return cycle_graph(n);
  if (name[0] == 'p' && n >= 1) return path_graph(n);
  return std::nullopt;
}

} // namespace subdiv
