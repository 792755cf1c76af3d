#pragma once

#include <memory>
#include <span>
#include <vector>

#include "copsrobbers/distance_oracle.hpp"
#include "copsrobbers/game.hpp"

namespace copsrobbers {

struct DecompositionStep {
  Vertex center = 0;
  int residual_order = 0;  // m before removing the center
  int threshold = 0;       // floor(sqrt(2m))
  int out_degree = 0;      // center's out-degree inside the residual
};

// Greedy peeling: while some residual vertex has residual out-degree at least
// floor(sqrt(2m)), take the one of largest degree (lowest id on ties) as a
// stationary center and delete it with its residual out-neighbours.
struct Decomposition {
  std::vector<DecompositionStep> steps;
  VertexSet centers;
  SubDigraph residual;
  VertexSet residual_vertices;
  int residual_max_out_degree = 0;
  int squad = 0;  // max residual out-degree + 1; 1 for two or fewer residual vertices, 0 for none

  int cops() const { return static_cast<int>(centers.size()) + squad; }
};

// Throws InvariantViolation if the cop count exceeds floor(sqrt(2n)).
Decomposition decompose(const Digraph& d);

// floor(sqrt(x)) for non-negative integers.
long long isqrt(long long x);

enum class PursuitMode { Diameter2, BipartiteDiameter3 };

// Diameter <= 2 selects Diameter2; otherwise a bipartite digraph of diameter
// <= 3 selects BipartiteDiameter3. Anything else is a PreconditionError.
PursuitMode pursuit_mode(const Digraph& d);

// One cop move for the residual-neighbourhood squad. `squad` lists positions in role order;
// the first min(l, |squad| - 1) cops guard the robber's residual
// out-neighbours in ascending order, the rest chase along shortest paths.
// Any cop with an arc onto the robber takes it instead. `side` is the
// bipartition (BipartiteDiameter3 only); guards wait on side 1 while the
// robber stands on side 1. Throws PreconditionError when a guard cannot reach
// an in-neighbour of its target in one move.
std::vector<Vertex> endgame_moves(const DistanceOracle& oracle, const Decomposition& dec, PursuitMode mode,
                                  const std::vector<std::uint8_t>& side, std::span<const Vertex> squad, Vertex r);

// Stationary cops on the centers, the squad on the residual.
class DigraphStrategy final : public CopStrategy {
 public:
  explicit DigraphStrategy(const Digraph& d);
  std::string name() const override { return "digraph"; }
  int cops_needed() const { return decomposition_.cops(); }
  const Decomposition& decomposition() const { return decomposition_; }
  PursuitMode mode() const { return mode_; }

  Multiset place(int k, std::uint64_t seed) override;
  Multiset move(const GameState& state) override;
  Json diagnostics() const override;

 private:
  const Digraph& d_;
  DistanceOracle oracle_;
  PursuitMode mode_;
  std::vector<std::uint8_t> side_;
  Decomposition decomposition_;
  std::vector<Vertex> stationary_;
  std::vector<Vertex> squad_;
  int pinned_rounds_ = 0;
};

}  // namespace copsrobbers
