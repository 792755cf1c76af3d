#pragma once

#include <random>
#include <vector>

#include "copsrobbers/graph.hpp"
#include "oracles.hpp"

namespace testing_helpers {

using namespace copsrobbers;

// G(n, p) without connectivity constraints.
inline Graph gnp(int n, double p, std::uint64_t seed) {
  auto rng = make_rng(seed, 0x7e57);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Digraph random_digraph(int n, double p, std::uint64_t seed) {
  auto rng = make_rng(seed, 0xd16);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, arcs);
}

inline oracle::Matrix matrix(const Digraph& d) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : d.arcs()) arcs.emplace_back(u, v);
  return oracle::adjacency(d.order(), arcs, false);
}

inline oracle::Matrix matrix(const Graph& g) { return matrix(g.as_digraph()); }

}  // namespace testing_helpers
