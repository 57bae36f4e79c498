#pragma once

#include <cstddef>

namespace subdiv {

/// Size caps for the exponential operations. Every cap turns a would-be hang
/// into a CapExceeded error (or a truncated flag, for collection sizes).
struct Limits {
  /// Largest pattern order accepted anywhere; hard ceiling is 16.
  int pattern_max_order = 12;
  /// Largest host order for the per-subset engine.
  int subset_engine_max_n = 16;
  /// Largest host order for the embedding engine.
  int embed_engine_max_n = 24;
  /// Largest vertex-set size the embedding engine may be asked for.
  int embed_max_set_size = 12;
  /// Largest host for max_topological_clique and witness enumeration.
  int search_max_n = 64;
  /// Most edges of F[S] enumerated when building subgraph classes (2^edges
  /// subsets per vertex subset).
  int subgraph_class_max_edges = 20;
  /// Collections of vertex sets stop growing (and report truncation) here.
  std::size_t max_sets = std::size_t{1} << 20;
  /// Witness enumeration stops (and reports truncation) here.
  std::size_t max_witnesses = std::size_t{1} << 22;
  /// Worker threads for parallel enumeration; 0 means hardware concurrency.
  unsigned threads = 1;
};

inline constexpr int kHardPatternOrderCeiling = 16;
inline constexpr int kMaskWidth = 64;

} // namespace subdiv
