#include <gtest/gtest.h>

#include <random>

#include "subdiv/families.hpp"
#include "subdiv/io.hpp"
#include "support/oracles.hpp"

using namespace subdiv;

namespace {

/// (line, offset) of the ParseError thrown by parsing text.
std::pair<std::size_t, std::size_t> parse_failure(const std::string &text, GraphFormat f) {
  try {
    parse_graph(text, f);
  } catch (const ParseError &e) {
    return {e.line(), e.offset()};
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {0, 0};
}

} // namespace

TEST(EdgeList, ParsesWithCommentsAndBlankLines) {
  const Graph g = parse_graph("# triangle\n3 3\n\n0 1\n1 2\n# mid\n0 2\n", GraphFormat::edge_list);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, AcceptsReversedEndpoints) {
  EXPECT_EQ(parse_graph("2 1\n1 0\n", GraphFormat::edge_list), complete_graph(2));
}

TEST(EdgeList, ErrorsCarryLineAndOffset) {
  EXPECT_EQ(parse_failure("3 1\n0 3\n", GraphFormat::edge_list), (std::pair<std::size_t, std::size_t>{2, 4}));
  EXPECT_EQ(parse_failure("3 2\n0 1\n1 0\n", GraphFormat::edge_list).first, 3u);
  EXPECT_EQ(parse_failure("3 1\n2 2\n", GraphFormat::edge_list).first, 2u);
  EXPECT_EQ(parse_failure("3 2\n0 1\n", GraphFormat::edge_list).first, 2u);
  EXPECT_EQ(parse_failure("3\n", GraphFormat::edge_list).first, 1u);
  EXPECT_EQ(parse_failure("3 1\n0 x\n", GraphFormat::edge_list), (std::pair<std::size_t, std::size_t>{2, 6}));
  EXPECT_EQ(parse_failure("", GraphFormat::edge_list).first, 1u);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(parse_graph("C~", GraphFormat::graph6), complete_graph(4));
  EXPECT_EQ(parse_graph(">>graph6<<C~\n", GraphFormat::graph6), complete_graph(4));
  EXPECT_EQ(parse_graph("@", GraphFormat::graph6).order(), 1);
  EXPECT_EQ(parse_graph("?", GraphFormat::graph6).order(), 0);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph("C", GraphFormat::graph6), ParseError);      // truncated
  EXPECT_THROW(parse_graph("C~~", GraphFormat::graph6), ParseError);    // trailing
  EXPECT_THROW(parse_graph("B@", GraphFormat::graph6), ParseError);     // padding bits set: 3 pairs, chunk 0b000001
  EXPECT_THROW(parse_graph("C\x20", GraphFormat::graph6), ParseError);  // out of range byte
}

TEST(Graph6, RoundTripAgainstIndependentDecoder) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const std::string s = to_graph6(g);
    EXPECT_EQ(oracle::decode_graph6(s), g);
    EXPECT_EQ(parse_graph(s, GraphFormat::graph6), g);
  }
}

TEST(Graph6, LargeOrderForm) {
  std::mt19937_64 rng(5);
  const Graph g = oracle::random_graph(rng, 100, 0.05);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph(s, GraphFormat::graph6), g);
}

TEST(Format, DetectionAndHeaderComments) {
  const Graph g = cycle_graph(5);
  const std::string e = serialize_graph(g, GraphFormat::edge_list, "spec one\nspec two");
  EXPECT_EQ(e.rfind("# spec one\n# spec two\n5 5\n", 0), 0u);
  EXPECT_EQ(detect_format(e), GraphFormat::edge_list);
  EXPECT_EQ(parse_graph(e), g);
  const std::string s = serialize_graph(g, GraphFormat::graph6, "spec");
  EXPECT_EQ(detect_format(s), GraphFormat::graph6);
  EXPECT_EQ(parse_graph(s), g);
}

TEST(EdgeList, RoundTripRandom) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 50; ++round) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 30), 0.3);
    EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::edge_list)), g);
  }
}
