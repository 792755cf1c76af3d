#include "copsrobbers/robbers.hpp"

#include <algorithm>

namespace copsrobbers {

RandomRobber::RandomRobber(const Digraph& board, std::uint64_t seed) : board_(board), rng_(make_rng(seed, 0x5b)) {}

Vertex RandomRobber::pick(std::vector<Vertex>& options, const Multiset& cops) {
  std::erase_if(options, [&](Vertex v) { return std::binary_search(cops.begin(), cops.end(), v); });
  if (options.empty()) return -1;
  std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
  return options[dist(rng_)];
}

Vertex RandomRobber::place(const Multiset& cops) {
  std::vector<Vertex> options(board_.order());
  for (Vertex v = 0; v < board_.order(); ++v) options[v] = v;
  Vertex v = pick(options, cops);
  return v < 0 ? 0 : v;
}

Vertex RandomRobber::move(const GameState& state) {
  const Vertex r = *state.robber;
  std::vector<Vertex> options{r};
  for (Vertex v : board_.out(r)) options.push_back(v);
  Vertex v = pick(options, state.cops);
  return v < 0 ? r : v;
}

GreedyDistanceRobber::GreedyDistanceRobber(const Digraph& board) : board_(board), oracle_(board) {}

Vertex GreedyDistanceRobber::best_of(std::span<const Vertex> options, const Multiset& cops) const {
  Vertex best = options.front();
  int best_distance = -1;
  for (Vertex v : options) {
    int d = oracle_.distance(cops, v);
    if (d > best_distance || (d == best_distance && v < best)) {
      best_distance = d;
      best = v;
    }
  }
  return best;
}

Vertex GreedyDistanceRobber::place(const Multiset& cops) {
  std::vector<Vertex> options(board_.order());
  for (Vertex v = 0; v < board_.order(); ++v) options[v] = v;
  return best_of(options, cops);
}

Vertex GreedyDistanceRobber::move(const GameState& state) {
  const Vertex r = *state.robber;
  std::vector<Vertex> options{r};
  for (Vertex v : board_.out(r)) options.push_back(v);
  return best_of(options, state.cops);
}

}  // namespace copsrobbers
