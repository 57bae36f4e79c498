#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "subdiv/families.hpp"
#include "subdiv/io.hpp"
#include "subdiv/iso.hpp"
#include "support/oracles.hpp"

using namespace subdiv;

namespace {

std::vector<int> shuffled(std::mt19937_64 &rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST(Automorphisms, KnownFamilies) {
  EXPECT_EQ(automorphism_count(complete_graph(5)), 120u);
  EXPECT_EQ(automorphism_count(cycle_graph(6)), 12u);
  EXPECT_EQ(automorphism_count(path_graph(4)), 2u);
  EXPECT_EQ(automorphism_count(star_graph(4)), 24u);
  EXPECT_EQ(automorphism_count(complete_bipartite(3, 3)), 72u);
  EXPECT_EQ(automorphism_count(complete_minus_edge(4)), 4u);
  EXPECT_EQ(automorphism_count(Graph::empty(4)), 24u);
}

TEST(Automorphisms, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(rng, n, p);
    ASSERT_EQ(automorphism_count(g), oracle::automorphisms(g)) << to_graph6(g);
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const Graph h = oracle::relabel(g, shuffled(rng, n));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
    EXPECT_TRUE(is_isomorphic(canonical_graph(g), g));
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 400; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b));
  }
}

TEST(Canonical, RegularGraphsThatRefinementCannotSplit) {
  // C6 and two disjoint triangles are both 2-regular on 6 vertices.
  const Graph c6 = cycle_graph(6);
  const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_FALSE(is_isomorphic(c6, two_triangles));
  EXPECT_EQ(automorphism_count(two_triangles), 72u);
}

TEST(Canonical, OrderCap) {
  EXPECT_THROW(canonical_form(complete_graph(13)), CapExceeded);
  Limits wide;
  wide.pattern_max_order = 16;
  EXPECT_EQ(automorphism_count(cycle_graph(16), wide), 32u);
  wide.pattern_max_order = 20;
  EXPECT_THROW(canonical_form(cycle_graph(17), wide), CapExceeded);
}

TEST(Canonical, HexIsStable) {
  EXPECT_EQ(canonical_form(complete_graph(4)).hex(), "fc");
  EXPECT_EQ(canonical_form(Graph::empty(3)).hex(), "0");
}
