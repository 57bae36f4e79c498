#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "subdiv/subdivision.hpp"

namespace gen {

struct PlantedWitness {
  subdiv::Graph host;
  subdiv::SubdivisionWitness witness;
};

/// A random TK_k on n vertices: k shuffled branch vertices, the remaining
/// n - k vertices scattered as interiors over random pattern edges, plus
/// noise edges with probability p.
inline PlantedWitness planted_clique_subdivision(std::mt19937_64 &rng, int k, int n, double p) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  PlantedWitness out;
  auto &w = out.witness;
  w.pattern = subdiv::Pattern::complete(k);
  w.branch.assign(perm.begin(), perm.begin() + k);
  const auto &edges = w.pattern.edges();
  std::vector<std::vector<int>> interiors(edges.size());
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (int i = k; i < n; ++i) interiors[pick(rng)].push_back(perm[static_cast<std::size_t>(i)]);

  std::set<std::pair<int, int>> es;
  auto add = [&](int a, int b) { es.emplace(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<int> r{w.branch[static_cast<std::size_t>(edges[i].u)]};
    r.insert(r.end(), interiors[i].begin(), interiors[i].end());
    r.push_back(w.branch[static_cast<std::size_t>(edges[i].v)]);
    for (std::size_t j = 0; j + 1 < r.size(); ++j) add(r[j], r[j + 1]);
    w.routes.push_back(std::move(r));
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) add(u, v);
  std::vector<subdiv::Edge> list;
  for (auto [a, b] : es) list.emplace_back(a, b);
  out.host = subdiv::Graph::from_edges(n, list);
  return out;
}

} // namespace gen
