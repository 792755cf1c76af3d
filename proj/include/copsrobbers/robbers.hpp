#pragma once

#include <cstdint>
#include <memory>

#include "copsrobbers/distance_oracle.hpp"
#include "copsrobbers/game.hpp"

namespace copsrobbers {

// Uniform choice among the legal vertices not occupied by a cop; stays put
// when every option is occupied.
class RandomRobber final : public RobberStrategy {
 public:
  RandomRobber(const Digraph& board, std::uint64_t seed);
  std::string name() const override { return "random"; }
  Vertex place(const Multiset& cops) override;
  Vertex move(const GameState& state) override;

 private:
  Vertex pick(std::vector<Vertex>& options, const Multiset& cops);
  const Digraph& board_;
  Rng rng_;
};

// Maximises the smallest cop-to-robber distance over its options, ties to the
// lowest id.
class GreedyDistanceRobber final : public RobberStrategy {
 public:
  explicit GreedyDistanceRobber(const Digraph& board);
  std::string name() const override { return "greedy-distance"; }
  Vertex place(const Multiset& cops) override;
  Vertex move(const GameState& state) override;

 private:
  Vertex best_of(std::span<const Vertex> options, const Multiset& cops) const;
  const Digraph& board_;
  DistanceOracle oracle_;
};

}  // namespace copsrobbers
