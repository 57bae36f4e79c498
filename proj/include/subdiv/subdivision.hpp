#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subdiv/bigint.hpp"
#include "subdiv/bits.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/limits.hpp"
#include "subdiv/parallel.hpp"
#include "subdiv/pattern.hpp"

namespace subdiv {

/// Certificate that G contains a subdivision of F: an injective branch map
/// plus one route per pattern edge. routes[i] belongs to pattern.edges()[i]
/// = {a,b} with a < b and runs from branch[a] to branch[b].
struct SubdivisionWitness {
  Pattern pattern;
  std::vector<int> branch;
  std::vector<std::vector<int>> routes;

  /// Branch vertices together with every route vertex.
  VertexSet vertex_set() const {
    std::set<int> vs(branch.begin(), branch.end());
    for (const auto &r : routes) vs.insert(r.begin(), r.end());
    return VertexSet(std::vector<int>(vs.begin(), vs.end()));
  }

  const std::vector<int> &route(int i, int j) const {
    const int idx = pattern.edge_index(i, j);
    if (idx < 0) throw DomainError("pattern has no edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    return routes[static_cast<std::size_t>(idx)];
  }

  friend bool operator==(const SubdivisionWitness &a, const SubdivisionWitness &b) {
    return a.pattern == b.pattern && a.branch == b.branch && a.routes == b.routes;
  }
};

/// Every violated witness invariant, as readable messages; empty means valid.
inline std::vector<std::string> validate_witness(const Graph &g, const SubdivisionWitness &w) {
  std::vector<std::string> out;
  const int l = w.pattern.order();
  const auto &edges = w.pattern.edges();
  auto edge_name = [&](std::size_t i) {
    return "path {" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "}";
  };
  if (static_cast<int>(w.branch.size()) != l) {
    out.push_back("branch map has " + std::to_string(w.branch.size()) + " entries but pattern has " +
                  std::to_string(l) + " vertices");
    return out;
  }
  std::set<int> branch_set;
  for (int f = 0; f < l; ++f) {
    const int x = w.branch[static_cast<std::size_t>(f)];
    if (!g.has_vertex(x)) {
      out.push_back("branch vertex " + std::to_string(x) + " (pattern vertex " + std::to_string(f) + ") is not in G");
      continue;
    }
    if (!branch_set.insert(x).second)
      out.push_back("branch map is not injective: vertex " + std::to_string(x) + " used twice");
  }
  if (w.routes.size() != edges.size()) {
    out.push_back("witness has " + std::to_string(w.routes.size()) + " paths but pattern has " +
                  std::to_string(edges.size()) + " edges");
    return out;
  }
  std::set<int> internal_seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto &r = w.routes[i];
    if (r.size() < 2) {
      out.push_back(edge_name(i) + " has length 0");
      continue;
    }
    if (r.front() != w.branch[static_cast<std::size_t>(edges[i].u)] ||
        r.back() != w.branch[static_cast<std::size_t>(edges[i].v)])
      out.push_back(edge_name(i) + " does not run between its branch vertices");
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!g.has_vertex(r[k])) {
        out.push_back(edge_name(i) + " visits vertex " + std::to_string(r[k]) + " which is not in G");
        continue;
      }
      if (k + 1 < r.size() && g.has_vertex(r[k + 1]) && (r[k] == r[k + 1] || !g.adjacent(r[k], r[k + 1])))
        out.push_back(edge_name(i) + ": {" + std::to_string(r[k]) + "," + std::to_string(r[k + 1]) +
                      "} is not an edge of G");
      if (k == 0 || k + 1 == r.size()) continue;
      if (branch_set.contains(r[k]))
        out.push_back(edge_name(i) + ": internal vertex " + std::to_string(r[k]) + " is a branch vertex");
      else if (!internal_seen.insert(r[k]).second)
        out.push_back(edge_name(i) + ": internal vertex reused (" + std::to_string(r[k]) + ")");
    }
  }
  return out;
}

enum class Engine { subset, embed };

inline const char *engine_name(Engine e) { return e == Engine::subset ? "subset" : "embed"; }

/// Distinct vertex sets of subdivisions of F in G (s(F,G) when complete).
struct EnumerationResult {
  std::vector<VertexSet> vertex_sets;
  BigInt count = 0;
  bool truncated = false;
  Engine engine = Engine::subset;
};

namespace detail {

struct HostMasks {
  int n = 0;
  std::vector<Mask> adj;

  explicit HostMasks(const Graph &g) : n(g.order()), adj(static_cast<std::size_t>(g.order())) {
    if (n > kMaskWidth) throw CapExceeded("host order " + std::to_string(n) + " exceeds 64-vertex search limit");
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  }
  Mask row(int v) const { return adj[static_cast<std::size_t>(v)]; }
};

struct StateKey {
  Mask used;
  int idx;
  int cur;
  bool operator==(const StateKey &) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey &k) const noexcept {
    std::uint64_t h = k.used * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(static_cast<unsigned>(k.idx)) << 32) ^ static_cast<unsigned>(k.cur + 1);
    h *= 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct PairHash {
  std::size_t operator()(const std::pair<int, Mask> &p) const noexcept {
    std::uint64_t h = p.second * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(p.first);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Per-subset search: does H[target] contain a subdivision of F using every
/// vertex of target? Branch maps are tried with a degree filter, then the
/// pattern edges are routed one at a time by depth-first path search; failed
/// (edge, endpoint, used-set) states are memoised per branch map.
class SpanningPacker {
public:
  SpanningPacker(const HostMasks &host, const Pattern &f) : h_(host), f_(f), edges_(f.edges()) {
    const int l = f_.order();
    order_.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) order_[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return f_.degree(a) > f_.degree(b); });
    for (int i = 0; i < l; ++i) {
      if (f_.degree(i) == 0) ++isolated_;
      if (f_.degree(i) <= 1) ++low_degree_;
    }
  }

  /// Witness over host vertex ids with vertex set exactly `target`.
  std::optional<std::pair<std::vector<int>, std::vector<std::vector<int>>>> find(Mask target) {
    target_ = target;
    const int l = f_.order();
    if (popcount(target) < l) return std::nullopt;
    if (edges_.empty() && popcount(target) != l) return std::nullopt;
    low_ = 0;
    int zero = 0;
    int low = 0;
    for_each_bit(target, [&](int v) {
      const int d = popcount(h_.row(v) & target);
      if (d < 2) {
        low_ |= bit(v);
        ++low;
        if (d == 0) ++zero;
      }
    });
    if (zero > isolated_ || low > low_degree_) return std::nullopt;
    branch_.assign(static_cast<std::size_t>(l), -1);
    paths_.assign(edges_.size(), {});
    if (assign(0, 0)) {
      std::vector<std::vector<int>> routes(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) routes[i] = paths_[i];
      return std::make_pair(branch_, std::move(routes));
    }
    return std::nullopt;
  }

private:
  bool assign(std::size_t depth, Mask used) {
    if (depth == order_.size()) {
      if ((low_ & ~used) != 0) return false;
      failed_.clear();
      endpoint_suffix_.assign(edges_.size() + 1, 0);
      for (std::size_t i = edges_.size(); i-- > 0;)
        endpoint_suffix_[i] = endpoint_suffix_[i + 1] | bit(branch_[static_cast<std::size_t>(edges_[i].u)]) |
                              bit(branch_[static_cast<std::size_t>(edges_[i].v)]);
      return route(0, used);
    }
    const int fv = order_[depth];
    const int need = f_.degree(fv);
    Mask cand = target_ & ~used;
    bool found = false;
    for_each_bit(cand, [&](int x) {
      if (found || popcount(h_.row(x) & target_) < need) return;
      branch_[static_cast<std::size_t>(fv)] = x;
      if (assign(depth + 1, used | bit(x))) found = true;
    });
    return found;
  }

  bool route(std::size_t idx, Mask used) {
    const Mask free = target_ & ~used;
    if (idx == edges_.size()) return free == 0;
    const Mask reach = free | endpoint_suffix_[idx];
    bool stuck = false;
    for_each_bit(free, [&](int w) {
      if (popcount(h_.row(w) & reach) < 2) stuck = true;
    });
    if (stuck) return false;
    const int u = branch_[static_cast<std::size_t>(edges_[idx].u)];
    auto &path = paths_[idx];
    path.assign(1, u);
    return walk(idx, u, used);
  }

  bool walk(std::size_t idx, int cur, Mask used) {
    const StateKey key{used, static_cast<int>(idx), cur};
    if (failed_.contains(key)) return false;
    const int goal = branch_[static_cast<std::size_t>(edges_[idx].v)];
    auto &path = paths_[idx];
    if (h_.row(cur) & bit(goal)) {
      path.push_back(goal);
      if (route(idx + 1, used)) return true;
      path.pop_back();
    }
    const Mask cand = h_.row(cur) & target_ & ~used;
    bool found = false;
    for_each_bit(cand, [&](int w) {
      if (found) return;
      path.push_back(w);
      if (walk(idx, w, used | bit(w))) {
        found = true;
        return;
      }
      path.pop_back();
    });
    if (!found) failed_.insert(key);
    return found;
  }

  const HostMasks &h_;
  const Pattern &f_;
  const std::vector<Edge> &edges_;
  std::vector<int> order_;
  int isolated_ = 0;
  int low_degree_ = 0;
  Mask target_ = 0;
  Mask low_ = 0;
  std::vector<int> branch_;
  std::vector<std::vector<int>> paths_;
  std::vector<Mask> endpoint_suffix_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

/// All automorphisms of a small pattern as permutations; empty when there are
/// more than `cap` of them.
inline std::vector<std::vector<int>> automorphism_list(const Pattern &f, std::uint64_t cap) {
  std::vector<std::vector<int>> out;
  if (f.automorphisms() > cap) return out;
  const Graph &g = f.graph();
  const int l = g.order();
  std::vector<int> perm(static_cast<std::size_t>(l), -1);
  std::vector<bool> taken(static_cast<std::size_t>(l), false);
  auto rec = [&](auto &&self, int i) -> void {
    if (i == l) {
      out.push_back(perm);
      return;
    }
    for (int x = 0; x < l; ++x) {
      if (taken[static_cast<std::size_t>(x)] || g.degree(x) != g.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (g.adjacent(i, j) != g.adjacent(x, perm[static_cast<std::size_t>(j)])) ok = false;
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = x;
      taken[static_cast<std::size_t>(x)] = true;
      self(self, i + 1);
      taken[static_cast<std::size_t>(x)] = false;
    }
    perm[static_cast<std::size_t>(i)] = -1;
  };
  rec(rec, 0);
  return out;
}

/// Witness-collecting enumeration: for each branch map that is lexicographically
/// least in its Aut(F)-orbit, routes the pattern edges one after another and
/// keeps the set of reachable used-vertex masks after each edge.
class EmbedEnumerator {
public:
  EmbedEnumerator(const HostMasks &host, const Pattern &f, int max_size)
      : h_(host), f_(f), edges_(f.edges()), max_size_(max_size), auts_(automorphism_list(f, 100000)) {}

  std::vector<std::vector<int>> branch_maps() const {
    std::vector<std::vector<int>> out;
    const int l = f_.order();
    std::vector<int> phi(static_cast<std::size_t>(l), -1);
    auto rec = [&](auto &&self, int i, Mask used) -> void {
      if (i == l) {
        if (canonical(phi)) out.push_back(phi);
        return;
      }
      for (int x = 0; x < h_.n; ++x) {
        if ((used & bit(x)) || popcount(h_.row(x)) < f_.degree(i)) continue;
        phi[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, used | bit(x));
      }
    };
    if (l <= max_size_) rec(rec, 0, 0);
    return out;
  }

  /// Vertex masks of every subdivision with this branch map.
  std::vector<Mask> collect(const std::vector<int> &phi) const {
    Mask start = 0;
    for (int x : phi) start |= bit(x);
    std::unordered_set<Mask> frontier{start};
    for (const Edge &e : edges_) {
      std::unordered_set<Mask> next;
      const int u = phi[static_cast<std::size_t>(e.u)];
      const int v = phi[static_cast<std::size_t>(e.v)];
      for (Mask used : frontier) internal_sets(u, v, used, next);
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    return {frontier.begin(), frontier.end()};
  }

private:
  bool canonical(const std::vector<int> &phi) const {
    for (const auto &sigma : auts_) {
      for (std::size_t i = 0; i < phi.size(); ++i) {
        const int a = phi[static_cast<std::size_t>(sigma[i])];
        if (a < phi[i]) return false;
        if (a > phi[i]) break;
      }
    }
    return true;
  }

  /// Inserts used | I for every internal set I of a u-v path avoiding `used`.
  void internal_sets(int u, int v, Mask used, std::unordered_set<Mask> &out) const {
    const int budget = max_size_ - popcount(used);
    std::unordered_set<std::pair<int, Mask>, PairHash> seen;
    std::vector<std::pair<int, Mask>> stack{{u, 0}};
    seen.insert({u, 0});
    while (!stack.empty()) {
      auto [cur, inner] = stack.back();
      stack.pop_back();
      if (h_.row(cur) & bit(v)) out.insert(used | inner);
      if (popcount(inner) >= budget) continue;
      const Mask cand = h_.row(cur) & ~used & ~inner;
      for_each_bit(cand, [&](int w) {
        std::pair<int, Mask> s{w, inner | bit(w)};
        if (seen.insert(s).second) stack.push_back(s);
      });
    }
  }

  const HostMasks &h_;
  const Pattern &f_;
  const std::vector<Edge> &edges_;
  int max_size_;
  std::vector<std::vector<int>> auts_;
};

inline void sort_sets(std::vector<VertexSet> &sets) { std::sort(sets.begin(), sets.end()); }

inline int resolve_max_size(const Graph &g, std::optional<int> max_set_size) {
  return max_set_size ? std::min(*max_set_size, g.order()) : g.order();
}

} // namespace detail

/// A subdivision of F whose vertex set is exactly S, if one exists.
inline std::optional<SubdivisionWitness> spans_subdivision(const Graph &g, const Pattern &f, const VertexSet &s,
                                                           const Limits &limits = {}) {
  if (static_cast<int>(s.size()) > limits.search_max_n)
    throw CapExceeded("spanning test on " + std::to_string(s.size()) + " vertices exceeds cap");
  if (s.size() < static_cast<std::size_t>(f.order())) return std::nullopt;
  const Graph sub = induced_subgraph(g, s);
  const detail::HostMasks host(sub);
  detail::SpanningPacker packer(host, f);
  auto found = packer.find(low_bits(sub.order()));
  if (!found) return std::nullopt;
  SubdivisionWitness w;
  w.pattern = f;
  for (int x : found->first) w.branch.push_back(s[static_cast<std::size_t>(x)]);
  for (auto &r : found->second) {
    std::vector<int> mapped;
    for (int x : r) mapped.push_back(s[static_cast<std::size_t>(x)]);
    w.routes.push_back(std::move(mapped));
  }
  return w;
}

/// Engine A: tests every vertex subset S with |F| <= |S| <= max_set_size for a
/// subdivision spanning exactly S.
inline EnumerationResult enumerate_distinguishable_subset(const Graph &g, const Pattern &f,
                                                          std::optional<int> max_set_size = {},
                                                          const Limits &limits = {}) {
  if (g.order() > limits.subset_engine_max_n)
    throw CapExceeded("subset engine: host order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.subset_engine_max_n));
  const int max_size = detail::resolve_max_size(g, max_set_size);
  const detail::HostMasks host(g);
  const int n = g.order();
  const int l = f.order();
  const int fe = f.size();

  constexpr int kBlockBits = 10;
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t block = std::uint64_t{1} << std::min(kBlockBits, n);
  const std::size_t blocks = static_cast<std::size_t>(total / block);
  std::vector<std::vector<Mask>> found(blocks);
  parallel_for(blocks, limits.threads, [&](std::size_t b) {
    detail::SpanningPacker packer(host, f);
    for (std::uint64_t s = b * block; s < (b + 1) * block; ++s) {
      const int size = popcount(s);
      if (size < l || size > max_size) continue;
      int inner_edges = 0;
      for_each_bit(s, [&](int v) { inner_edges += popcount(host.row(v) & s); });
      if (inner_edges / 2 < fe + size - l) continue;
      if (packer.find(s)) found[b].push_back(s);
    }
  });

  EnumerationResult r;
  r.engine = Engine::subset;
  for (const auto &part : found)
    for (Mask s : part) {
      if (r.vertex_sets.size() == limits.max_sets) {
        r.truncated = true;
        break;
      }
      r.vertex_sets.push_back(VertexSet::from_mask(s));
    }
  detail::sort_sets(r.vertex_sets);
  r.count = r.vertex_sets.size();
  return r;
}

/// Engine B: enumerates subdivisions directly (branch images first, then the
/// e(F) paths under disjointness) and deduplicates their vertex sets.
inline EnumerationResult enumerate_distinguishable_embed(const Graph &g, const Pattern &f,
                                                         std::optional<int> max_set_size = {},
                                                         const Limits &limits = {}) {
  if (g.order() > limits.embed_engine_max_n)
    throw CapExceeded("embed engine: host order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.embed_engine_max_n));
  const int max_size = detail::resolve_max_size(g, max_set_size);
  if (max_size > limits.embed_max_set_size)
    throw CapExceeded("embed engine: max set size " + std::to_string(max_size) + " exceeds cap " +
                      std::to_string(limits.embed_max_set_size));
  const detail::HostMasks host(g);
  const detail::EmbedEnumerator engine(host, f, max_size);
  const auto maps = engine.branch_maps();
  std::vector<std::vector<Mask>> per_map(maps.size());
  parallel_for(maps.size(), limits.threads, [&](std::size_t i) { per_map[i] = engine.collect(maps[i]); });

  std::unordered_set<Mask> all;
  EnumerationResult r;
  r.engine = Engine::embed;
  for (const auto &part : per_map) {
    for (Mask s : part) {
      if (all.contains(s)) continue;
      if (all.size() == limits.max_sets) {
        r.truncated = true;
        break;
      }
      all.insert(s);
    }
    if (r.truncated) break;
  }
  r.vertex_sets.reserve(all.size());
  for (Mask s : all) r.vertex_sets.push_back(VertexSet::from_mask(s));
  detail::sort_sets(r.vertex_sets);
  r.count = r.vertex_sets.size();
  return r;
}

inline EnumerationResult enumerate_distinguishable(const Graph &g, const Pattern &f, Engine engine,
                                                   std::optional<int> max_set_size = {}, const Limits &limits = {}) {
  return engine == Engine::subset ? enumerate_distinguishable_subset(g, f, max_set_size, limits)
                                  : enumerate_distinguishable_embed(g, f, max_set_size, limits);
}

/// s(F,G) restricted to sets of at most max_set_size vertices. Throws
/// CapExceeded rather than return a truncated count.
inline BigInt count_distinguishable(const Graph &g, const Pattern &f, Engine engine = Engine::subset,
                                    std::optional<int> max_set_size = {}, const Limits &limits = {}) {
  auto r = enumerate_distinguishable(g, f, engine, max_set_size, limits);
  if (r.truncated) throw CapExceeded("vertex-set collection truncated at " + std::to_string(limits.max_sets));
  return r.count;
}

/// Calls fn on every subdivision of F in G with at most max_set_size vertices
/// (all branch maps, all path systems). Returns true when stopped at
/// limits.max_witnesses.
inline bool for_each_witness(const Graph &g, const Pattern &f, std::optional<int> max_set_size, const Limits &limits,
                             const std::function<void(const SubdivisionWitness &)> &fn) {
  if (g.order() > limits.search_max_n)
    throw CapExceeded("witness enumeration: host order " + std::to_string(g.order()) + " exceeds cap");
  const detail::HostMasks host(g);
  const int max_size = detail::resolve_max_size(g, max_set_size);
  const int l = f.order();
  const auto &edges = f.edges();
  SubdivisionWitness w;
  w.pattern = f;
  w.branch.assign(static_cast<std::size_t>(l), -1);
  w.routes.assign(edges.size(), {});
  std::size_t emitted = 0;
  bool truncated = false;

  std::function<void(std::size_t, Mask)> route;
  std::function<void(std::size_t, int, Mask)> walk = [&](std::size_t idx, int cur, Mask used) {
    if (truncated) return;
    const int goal = w.branch[static_cast<std::size_t>(edges[idx].v)];
    auto &path = w.routes[idx];
    if (host.row(cur) & bit(goal)) {
      path.push_back(goal);
      route(idx + 1, used);
      path.pop_back();
    }
    if (popcount(used) >= max_size) return;
    for_each_bit(host.row(cur) & ~used, [&](int x) {
      path.push_back(x);
      walk(idx, x, used | bit(x));
      path.pop_back();
    });
  };
  route = [&](std::size_t idx, Mask used) {
    if (truncated) return;
    if (idx == edges.size()) {
      if (emitted == limits.max_witnesses) {
        truncated = true;
        return;
      }
      ++emitted;
      fn(w);
      return;
    }
    const int u = w.branch[static_cast<std::size_t>(edges[idx].u)];
    w.routes[idx].assign(1, u);
    walk(idx, u, used);
  };
  std::function<void(int, Mask)> assign = [&](int i, Mask used) {
    if (truncated) return;
    if (i == l) {
      route(0, used);
      return;
    }
    for (int x = 0; x < host.n; ++x) {
      if ((used & bit(x)) || popcount(host.row(x)) < f.degree(i)) continue;
      w.branch[static_cast<std::size_t>(i)] = x;
      assign(i + 1, used | bit(x));
    }
  };
  if (l <= max_size) assign(0, 0);
  return truncated;
}

/// Given a subdivision of K_k, returns a subdivision of K_l (2 <= l <= k) on
/// branch vertices x_1..x_l that still passes through every original branch
/// vertex: all paths among x_1..x_l are kept except x_1-x_l, which is replaced
/// by the walk x_l, x_{l+1}, ..., x_k followed by the old x_1-x_k path.
inline SubdivisionWitness extract_subclique_subdivision(const Graph &g, const SubdivisionWitness &w, int l) {
  const int k = w.pattern.order();
  if (!w.pattern.is_complete()) throw DomainError("extraction needs a subdivision of a complete graph");
  if (l > k) throw DomainError("l = " + std::to_string(l) + " exceeds k = " + std::to_string(k));
  if (l < 2) throw DomainError("l must be at least 2");
  if (auto v = validate_witness(g, w); !v.empty()) throw InvalidWitness("input witness invalid: " + v.front());
  if (l == k) return w;

  SubdivisionWitness out;
  out.pattern = Pattern::complete(l);
  out.branch.assign(w.branch.begin(), w.branch.begin() + l);
  for (const Edge &e : out.pattern.edges()) {
    if (e.u == 0 && e.v == l - 1) {
      // x_l -> x_{l+1} -> ... -> x_k, then x_k -> x_1; stored from x_1.
      std::vector<int> walk{w.branch[static_cast<std::size_t>(l - 1)]};
      for (int i = l - 1; i + 1 < k; ++i) {
        const auto &p = w.route(i, i + 1);
        walk.insert(walk.end(), p.begin() + 1, p.end());
      }
      const auto &closing = w.route(0, k - 1);
      walk.insert(walk.end(), closing.rbegin() + 1, closing.rend());
      std::reverse(walk.begin(), walk.end());
      out.routes.push_back(std::move(walk));
    } else {
      out.routes.push_back(w.route(e.u, e.v));
    }
  }
  return out;
}

/// Trivial subdivision of K_d inside a graph that contains K_d on `vertices`.
inline SubdivisionWitness trivial_clique_witness(const std::vector<int> &vertices) {
  SubdivisionWitness w;
  const int d = static_cast<int>(vertices.size());
  w.pattern = Pattern::complete(d);
  w.branch = vertices;
  for (const Edge &e : w.pattern.edges())
    w.routes.push_back({vertices[static_cast<std::size_t>(e.u)], vertices[static_cast<std::size_t>(e.v)]});
  return w;
}

struct TopologicalClique {
  int d = 0;
  std::optional<SubdivisionWitness> witness;
};

namespace detail {

/// Searches for a subdivision of K_d. Branch sets are increasing sequences
/// (K_d is fully symmetric). Adjacent branch pairs take the direct edge: no
/// other path can use that edge, so a longer route never helps.
class CliqueSubdivisionFinder {
public:
  CliqueSubdivisionFinder(const HostMasks &h, int d) : h_(h), d_(d) {}

  std::optional<std::pair<std::vector<int>, std::vector<std::vector<int>>>> find() {
    std::vector<int> eligible;
    for (int v = 0; v < h_.n; ++v)
      if (popcount(h_.row(v)) >= d_ - 1) eligible.push_back(v);
    if (static_cast<int>(eligible.size()) < d_) return std::nullopt;
    branch_.clear();
    if (choose(eligible, 0)) return std::make_pair(branch_, routes_);
    return std::nullopt;
  }

private:
  bool choose(const std::vector<int> &eligible, std::size_t from) {
    if (static_cast<int>(branch_.size()) == d_) return try_branch();
    for (std::size_t i = from; i < eligible.size(); ++i) {
      if (eligible.size() - i < static_cast<std::size_t>(d_) - branch_.size()) break;
      branch_.push_back(eligible[i]);
      if (choose(eligible, i + 1)) return true;
      branch_.pop_back();
    }
    return false;
  }

  bool try_branch() {
    pairs_.clear();
    routes_.assign(static_cast<std::size_t>(d_ * (d_ - 1) / 2), {});
    Mask used = 0;
    for (int x : branch_) used |= bit(x);
    int idx = 0;
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j, ++idx) {
        const int a = branch_[static_cast<std::size_t>(i)];
        const int b = branch_[static_cast<std::size_t>(j)];
        if (h_.row(a) & bit(b))
          routes_[static_cast<std::size_t>(idx)] = {a, b};
        else
          pairs_.push_back({i, j, idx});
      }
    failed_.clear();
    return route(0, used);
  }

  bool feasible(std::size_t from, Mask used) const {
    const Mask free = low_bits(h_.n) & ~used;
    if (static_cast<std::size_t>(popcount(free)) < pairs_.size() - from) return false;
    std::vector<int> need(static_cast<std::size_t>(d_), 0);
    for (std::size_t p = from; p < pairs_.size(); ++p) {
      ++need[static_cast<std::size_t>(pairs_[p].i)];
      ++need[static_cast<std::size_t>(pairs_[p].j)];
    }
    for (int i = 0; i < d_; ++i)
      if (popcount(h_.row(branch_[static_cast<std::size_t>(i)]) & free) < need[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool route(std::size_t p, Mask used) {
    if (p == pairs_.size()) return true;
    if (!feasible(p, used)) return false;
    const int a = branch_[static_cast<std::size_t>(pairs_[p].i)];
    auto &path = routes_[static_cast<std::size_t>(pairs_[p].idx)];
    path.assign(1, a);
    return walk(p, a, used);
  }

  bool walk(std::size_t p, int cur, Mask used) {
    const StateKey key{used, static_cast<int>(p), cur};
    if (failed_.contains(key)) return false;
    const int goal = branch_[static_cast<std::size_t>(pairs_[p].j)];
    auto &path = routes_[static_cast<std::size_t>(pairs_[p].idx)];
    if (path.size() > 1 && (h_.row(cur) & bit(goal))) {
      path.push_back(goal);
      if (route(p + 1, used)) return true;
      path.pop_back();
    }
    bool found = false;
    for_each_bit(h_.row(cur) & ~used, [&](int w) {
      if (found) return;
      path.push_back(w);
      if (walk(p, w, used | bit(w))) {
        found = true;
        return;
      }
      path.pop_back();
    });
    if (!found) failed_.insert(key);
    return found;
  }

  struct Pair {
    int i;
    int j;
    int idx;
  };

  const HostMasks &h_;
  int d_;
  std::vector<int> branch_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<int>> routes_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

} // namespace detail

/// Largest d <= d_cap such that G contains a subdivision of K_d, with a
/// witness. Exhaustive, from the largest feasible d downward.
inline TopologicalClique max_topological_clique(const Graph &g, int d_cap, const Limits &limits = {}) {
  if (g.order() > limits.search_max_n)
    throw CapExceeded("max_topological_clique: host order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.search_max_n));
  const detail::HostMasks host(g);
  int start = std::min({d_cap, g.order(), g.max_degree() + 1, limits.pattern_max_order});
  for (int d = start; d >= 1; --d) {
    detail::CliqueSubdivisionFinder finder(host, d);
    if (auto found = finder.find()) {
      SubdivisionWitness w;
      w.pattern = Pattern::complete(d);
      w.branch = found->first;
      w.routes = found->second;
      return {d, std::move(w)};
    }
  }
  return {0, std::nullopt};
}

/// For every I subset of [d] with |I| >= l (ordered by size, then
/// lexicographically; at most `cap` of them), restricts the K_d subdivision to
/// the paths among X_I and extracts a K_l subdivision through all of X_I.
inline std::vector<SubdivisionWitness> theorem_i_family(const Graph &g, const SubdivisionWitness &w, int l,
                                                        std::optional<std::size_t> cap = {}) {
  const int d = w.pattern.order();
  if (!w.pattern.is_complete()) throw DomainError("family needs a subdivision of a complete graph");
  if (l > d || l < 2) throw DomainError("need 2 <= l <= d");
  if (auto v = validate_witness(g, w); !v.empty()) throw InvalidWitness("input witness invalid: " + v.front());
  std::vector<SubdivisionWitness> out;
  for (int size = l; size <= d; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (cap && out.size() >= *cap) return out;
      SubdivisionWitness t;
      t.pattern = Pattern::complete(size);
      for (int i : idx) t.branch.push_back(w.branch[static_cast<std::size_t>(i)]);
      for (const Edge &e : t.pattern.edges())
        t.routes.push_back(w.route(idx[static_cast<std::size_t>(e.u)], idx[static_cast<std::size_t>(e.v)]));
      out.push_back(extract_subclique_subdivision(g, t, l));
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == d - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

} // namespace subdiv
