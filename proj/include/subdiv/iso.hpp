#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subdiv/bits.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/limits.hpp"

namespace subdiv {

/// Isomorphism-invariant code of a small graph: order, size and the
/// upper-triangle adjacency bits under a canonical ordering.
struct CanonicalForm {
  int n = 0;
  int m = 0;
  std::array<std::uint64_t, 2> code{};

  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;

  /// Hex digest, used as a stable identifier in reports.
  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    const int bits = n * (n - 1) / 2;
    for (int k = 0; k < bits; k += 4) {
      int nibble = 0;
      for (int b = 0; b < 4; ++b) {
        const int idx = k + b;
        nibble <<= 1;
        if (idx < bits) nibble |= static_cast<int>((code[static_cast<std::size_t>(idx / 64)] >> (63 - idx % 64)) & 1U);
      }
      out.push_back(digits[nibble]);
    }
    return out;
  }
};

struct CanonicalResult {
  CanonicalForm form;
  /// ordering[i] = vertex placed at canonical position i
  std::vector<int> ordering;
  std::uint64_t automorphisms = 0;
};

namespace detail {

/// Individualisation-refinement search over small graphs. Leaves of the
/// search tree are discrete orderings; the minimum code over leaves is the
/// canonical form and the number of leaves achieving it is |Aut(G)|.
/// Swapping two twin vertices is an automorphism fixing everything already
/// individualised, so only one twin per class is expanded (weighted by the
/// class size).
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    m_ = g.size();
  }

  CanonicalResult run() {
    using Cells = std::vector<std::vector<int>>;
    Cells start;
    if (n_ > 0) {
      start.emplace_back();
      for (int v = 0; v < n_; ++v) start.back().push_back(v);
    }
    search(std::move(start), 1);
    CanonicalResult r;
    r.form.n = n_;
    r.form.m = m_;
    r.form.code = best_code_;
    r.ordering = best_order_;
    r.automorphisms = n_ == 0 ? 1 : leaf_weight_;
    return r;
  }

private:
  using Cells = std::vector<std::vector<int>>;

  void refine(Cells &cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      Cells next;
      next.reserve(cells.size());
      for (const auto &cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cell) {
          std::vector<int> sig(cells.size(), 0);
          for_each_bit(adj_[static_cast<std::size_t>(v)],
                       [&](int w) { ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])]; });
          groups[sig].push_back(v);
        }
        for (auto &[sig, members] : groups) next.push_back(std::move(members));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  bool twins(int a, int b) const {
    const Mask diff = adj_[static_cast<std::size_t>(a)] ^ adj_[static_cast<std::size_t>(b)];
    return (diff & ~(bit(a) | bit(b))) == 0;
  }

  std::array<std::uint64_t, 2> code_of(const std::vector<int> &order) const {
    std::array<std::uint64_t, 2> code{};
    int k = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] &
            bit(order[static_cast<std::size_t>(j)]))
          code[static_cast<std::size_t>(k / 64)] |= std::uint64_t{1} << (63 - k % 64);
    return code;
  }

  void search(Cells cells, std::uint64_t weight) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      std::vector<int> order;
      order.reserve(static_cast<std::size_t>(n_));
      for (const auto &cell : cells) order.push_back(cell.front());
      const auto code = code_of(order);
      if (!have_best_ || code < best_code_) {
        have_best_ = true;
        best_code_ = code;
        best_order_ = std::move(order);
        leaf_weight_ = weight;
      } else if (code == best_code_) {
        leaf_weight_ += weight;
      }
      return;
    }
    const auto &cell = cells[target];
    std::vector<bool> covered(cell.size(), false);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (covered[i]) continue;
      std::uint64_t twin_count = 0;
      for (std::size_t j = i; j < cell.size(); ++j)
        if (!covered[j] && (j == i || twins(cell[i], cell[j]))) {
          covered[j] = true;
          ++twin_count;
        }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({cell[i]});
        std::vector<int> rest;
        for (int v : cell)
          if (v != cell[i]) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      search(std::move(child), weight * twin_count);
    }
  }

  int n_;
  int m_ = 0;
  std::vector<Mask> adj_;
  bool have_best_ = false;
  std::array<std::uint64_t, 2> best_code_{};
  std::vector<int> best_order_;
  std::uint64_t leaf_weight_ = 0;
};

inline void require_small(const Graph &g, int cap) {
  const int ceiling = cap < kHardPatternOrderCeiling ? cap : kHardPatternOrderCeiling;
  if (g.order() > ceiling)
    throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds small-graph cap " +
                      std::to_string(ceiling));
}

} // namespace detail

inline CanonicalResult canonical_labeling(const Graph &g, const Limits &limits = {}) {
  detail::require_small(g, limits.pattern_max_order);
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph &g, const Limits &limits = {}) {
  return canonical_labeling(g, limits).form;
}

/// Relabels g so that canonical position i becomes vertex i.
inline Graph canonical_graph(const Graph &g, const Limits &limits = {}) {
  const auto r = canonical_labeling(g, limits);
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) pos[static_cast<std::size_t>(r.ordering[static_cast<std::size_t>(i)])] = i;
  std::vector<Edge> edges;
  for (const Edge &e : g.edges()) edges.emplace_back(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(g.order(), edges);
}

inline bool is_isomorphic(const Graph &a, const Graph &b, const Limits &limits = {}) {
  detail::require_small(a, limits.pattern_max_order);
  detail::require_small(b, limits.pattern_max_order);
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, limits) == canonical_form(b, limits);
}

inline std::uint64_t automorphism_count(const Graph &g, const Limits &limits = {}) {
  return canonical_labeling(g, limits).automorphisms;
}

} // namespace subdiv
