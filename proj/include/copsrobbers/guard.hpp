#pragma once

#include <functional>
#include <optional>

#include "copsrobbers/distance_oracle.hpp"
#include "copsrobbers/game.hpp"

namespace copsrobbers {

// Two cops keeping the robber out of B(u, rho) on a graph of girth at least
// 4 rho - 1. `follower` shadows the robber along the unique u-robber path,
// `anchor` sits at u. Both are at u while the robber is 2 rho or more away.
struct GuardAssignment {
  Vertex u = 0;
  int rho = 1;
  Vertex follower = 0;
  Vertex anchor = 0;
  std::optional<Vertex> entry;  // the unique B'(u, rho) vertex the robber can reach in rho - 1 moves

  static GuardAssignment at(Vertex u, int rho) { return {u, rho, u, u, std::nullopt}; }
  bool captures(Vertex robber) const { return follower == robber || anchor == robber; }
};

// rho = floor((g + 1) / 4), clamped to n for forests (every ball is a tree).
int protected_radius(const Graph& g);

// The vertex k steps from u on the shortest u-r path (lowest ids on ties;
// unique inside B(u, 2 rho - 1) by the girth bound).
Vertex path_vertex(const DistanceOracle& oracle, Vertex u, Vertex r, int k);

// One cop move. A cop at or next to the robber takes it. Otherwise, with D the
// robber's distance from u: D >= 2 rho puts both cops on u; rho < D < 2 rho
// puts one cop on the u-r path at distance 2 rho - D and the other on u,
// swapping roles when the robber switches branch. Throws PreconditionError if
// the robber sits inside B(u, rho) out of reach, InvariantViolation if the
// target configuration is more than one move away.
GuardAssignment guard_move(const DistanceOracle& oracle, const GuardAssignment& ga, Vertex robber);

// The positional invariant after a cop move, robber uncaptured.
bool guard_invariant(const DistanceOracle& oracle, const GuardAssignment& ga, Vertex robber);

// Vertices of B'(u, rho) reachable from r by walks of at most rho - 1 steps.
VertexSet reachable_entries(const DistanceOracle& oracle, Vertex u, int rho, Vertex r);

// Robber policy: (cop positions, robber) -> next robber vertex.
using RobberPolicy = std::function<Vertex(const Multiset& cops, Vertex robber)>;

struct FlushResult {
  bool captured = false;
  bool flushed = false;  // robber ended outside B(u, 2 rho - 2)
  int steps = 0;
  Vertex robber = 0;
  Vertex chaser = 0;
};

// Pair parked at u; the chaser walks the shortest path toward the robber
// until the robber leaves B(u, 2 rho - 2) or is caught.
FlushResult run_flush(const DistanceOracle& oracle, Vertex u, int rho, Vertex chaser, Vertex robber,
                      const RobberPolicy& policy, int max_steps);

struct GuardTrialReport {
  int trials = 0;
  int steps = 0;
  int captures = 0;
  int entries = 0;               // robber stepped into B(u, rho)
  int uncaptured_entries = 0;    // ... and was not taken on the next cop move
  int invariant_violations = 0;
};

// Plays `trials` robber trajectories of `length` steps against the pair on
// u, starting outside B(u, 2 rho - 2). `bias` is the probability that the
// robber steps toward u (ties broken at random); otherwise it walks at random.
GuardTrialReport run_guard_trials(const DistanceOracle& oracle, Vertex u, int rho, int trials, int length, double bias,
                                  std::uint64_t seed);

// Engine strategy: a guarding pair on `center` plus an optional chaser that
// flushes the robber out of B(center, 2 rho - 2) and then keeps following.
class GuardStrategy final : public CopStrategy {
 public:
  GuardStrategy(const Graph& g, Vertex center, bool chaser = true);
  std::string name() const override { return "girth-guard"; }
  int cops_needed() const { return chaser_ ? 3 : 2; }
  int rho() const { return rho_; }

  Multiset place(int k, std::uint64_t seed) override;
  Multiset move(const GameState& state) override;
  Json diagnostics() const override;

 private:
  const Graph& g_;
  DistanceOracle oracle_;
  int girth_;
  int rho_;
  bool chaser_;
  GuardAssignment pair_;
  std::vector<Vertex> spare_;  // chaser followed by any extra cops
  bool active_ = false;
  int flush_rounds_ = 0;
  int guard_rounds_ = 0;
};

}  // namespace copsrobbers
