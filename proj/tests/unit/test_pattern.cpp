#include <gtest/gtest.h>

#include <random>

#include "subdiv/iso.hpp"
#include "subdiv/pattern.hpp"
#include "support/oracles.hpp"

using namespace subdiv;

namespace {

/// Isomorphism classes of subgraphs by brute force: every vertex subset,
/// every edge subset of it (or only the induced one), deduplicated with the
/// permutation oracle.
std::vector<Graph> brute_classes(const Graph &f, int min_vertices, bool induced) {
  std::vector<Graph> classes;
  const int n = f.order();
  for (int vs = 1; vs < (1 << n); ++vs) {
    if (__builtin_popcount(static_cast<unsigned>(vs)) < min_vertices) continue;
    std::vector<int> idx;
    for (int v = 0; v < n; ++v)
      if (vs >> v & 1) idx.push_back(v);
    std::vector<Edge> inner;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (f.adjacent(idx[i], idx[j])) inner.emplace_back(static_cast<int>(i), static_cast<int>(j));
    const int m = static_cast<int>(inner.size());
    for (int es = 1; es < (1 << m); ++es) {
      if (induced && es != (1 << m) - 1) continue;
      std::vector<Edge> chosen;
      for (int i = 0; i < m; ++i)
        if (es >> i & 1) chosen.push_back(inner[static_cast<std::size_t>(i)]);
      const Graph h = Graph::from_edges(static_cast<int>(idx.size()), chosen);
      bool seen = false;
      for (const auto &c : classes) seen = seen || oracle::isomorphic(c, h);
      if (!seen) classes.push_back(h);
    }
  }
  return classes;
}

} // namespace

TEST(Pattern, NamedFamilies) {
  EXPECT_EQ(Pattern::named("k4").size(), 6);
  EXPECT_EQ(Pattern::named("K4-").size(), 5);
  EXPECT_EQ(Pattern::named("c5").order(), 5);
  EXPECT_EQ(Pattern::named("p4").size(), 3);
  EXPECT_EQ(Pattern::named("star3").order(), 4);
  EXPECT_EQ(Pattern::named("K4-").label(), "K4-");
  EXPECT_THROW(Pattern::named("q4"), DomainError);
  EXPECT_THROW(Pattern::named("c2"), DomainError);
  EXPECT_THROW(Pattern::named("k"), DomainError);
}

TEST(Pattern, EdgeIndexFollowsLexicographicEdges) {
  const Pattern f = Pattern::complete_minus(4);
  EXPECT_EQ(f.edge_index(0, 1), 0);
  EXPECT_EQ(f.edge_index(3, 1), 4);
  EXPECT_EQ(f.edge_index(2, 3), -1);
  EXPECT_EQ(f.automorphisms(), 4u);
}

TEST(Pattern, DescribeSmallGraph) {
  EXPECT_EQ(describe_small_graph(complete_graph(3)), "K3");
  EXPECT_EQ(describe_small_graph(cycle_graph(4)), "C4");
  EXPECT_EQ(describe_small_graph(star_graph(3)), "K1,3");
  EXPECT_EQ(describe_small_graph(Graph::from_edges(4, {{0, 1}, {2, 3}})).find(':'), 1u);
}

TEST(SubgraphClasses, KFourMinusAllAndInduced) {
  const Pattern f = Pattern::complete_minus(4);
  const auto all = subgraph_classes(f, 4, true, SubgraphKind::all);
  EXPECT_EQ(all.size(), brute_classes(f.graph(), 4, false).size());
  const auto induced = subgraph_classes(f, 4, true, SubgraphKind::induced);
  ASSERT_EQ(induced.size(), 1u);
  EXPECT_EQ(induced[0].name(), "K4-");
  const auto three = subgraph_classes(f, 3, true, SubgraphKind::induced);
  ASSERT_EQ(three.size(), 3u);  // K4-, K3, P3
  EXPECT_EQ(three[0].order(), 4);
}

TEST(SubgraphClasses, MatchBruteForceOnRandomPatterns) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, 0.6);
    if (g.size() == 0) continue;
    const Pattern f = Pattern::from_graph(g);
    for (int k = 1; k <= n; ++k)
      for (bool induced : {false, true}) {
        const auto got = subgraph_classes(f, k, true, induced ? SubgraphKind::induced : SubgraphKind::all);
        const auto want = brute_classes(g, k, induced);
        ASSERT_EQ(got.size(), want.size());
        for (const auto &w : want) {
          int hits = 0;
          for (const auto &c : got) hits += oracle::isomorphic(c.graph(), w) ? 1 : 0;
          EXPECT_EQ(hits, 1);
        }
        for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(got[i - 1].order(), got[i].order());
      }
  }
}

TEST(Clique, Number) {
  EXPECT_EQ(clique_number(complete_graph(5)), 5);
  EXPECT_EQ(clique_number(complete_minus_edge(4)), 3);
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(clique_number(Graph::empty(3)), 1);
  EXPECT_EQ(clique_number(Graph::empty(0)), 0);
}
