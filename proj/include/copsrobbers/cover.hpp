#pragma once

#include <optional>
#include <vector>

#include "copsrobbers/distance_oracle.hpp"
#include "copsrobbers/game.hpp"
#include "copsrobbers/guard.hpp"
#include "copsrobbers/matching.hpp"

namespace copsrobbers {

// ---------------------------------------------------------------------------
// Cover sets

struct CoverSet {
  VertexSet vertices;
  double p = 1;
  bool verified = false;
  int trials = 0;    // sampled (A, i) checks behind `verified`
  int failures = 0;
  int attempts = 1;  // samples drawn, including resamples
};

// Each vertex independently with probability p; redrawn on a fresh stream
// while |C| > 2np. Throws PreconditionError unless 0 < p <= 1.
CoverSet sample_cover_set(int n, double p, std::uint64_t seed);

// R inside `outer`, each member kept with probability p, redrawn while
// |R| > 2 |outer| p.
CoverSet sample_nested(const VertexSet& outer, double p, std::uint64_t seed);

// log^2 n / p, the ball size per element of A that forces |B(A,i) & C| >= |A|.
double cover_threshold(int n, double p);

// |B(A,i) & C| >= |A| whenever |B(A,i)| >= scale |A| log^2 n / p; true for
// empty A and for pairs below the threshold.
bool cover_property_holds(const DistanceOracle& oracle, const VertexSet& c, double p, const VertexSet& a, int i,
                          double scale = 1);

struct CoverReport {
  int trials = 0;
  int qualifying = 0;  // (A, i) pairs that met the ball-size threshold
  int failures = 0;
  bool exhaustive = false;
  bool vacuous() const { return qualifying == 0; }
  bool passed() const { return failures == 0; }
};

// Statistical check of the cover property, not a proof. For n <= 12 every A
// with |A| <= 3 and every radius is checked; otherwise `trials` random A of a
// size that can still qualify are drawn, each at its smallest qualifying
// radius (the hardest one, since |B(A,i) & C| grows with i).
CoverReport verify_cover_property(const DistanceOracle& oracle, const VertexSet& c, double p, int trials,
                                  std::uint64_t seed, double threshold_scale = 1);

// ---------------------------------------------------------------------------
// One escalation stage

enum class Dispatch { Guard, Occupy };

struct StagePlan {
  VertexSet base;   // S (or {r} at stage 0)
  int radius = 1;   // left = B(base, radius)
  int ell = 2;      // matched tokens lie within ell of their target
  Dispatch mode = Dispatch::Occupy;
  VertexSet left;
  VertexSet held;   // left vertices that already carry a team token (informational)
  ReachGraph reach;
  MatchingResult matching;
  std::vector<std::pair<int, Vertex>> dispatch;  // (token index, target)
  bool left_perfect = false;
  bool physical = false;  // every left vertex covered by a real token
  std::optional<VertexSet> violator;
};

// Matches left = B(base, radius) against the team tokens within ell (a token
// on a left vertex covers it at distance 0) and extracts the maximal Hall
// violator when the matching is not left-perfect. `team` holds token
// positions (distinct), `real` flags which tokens are physical cops.
StagePlan escalation_round(const DistanceOracle& oracle, const VertexSet& base, int radius, int ell, Dispatch mode,
                           const std::vector<Vertex>& team, const std::vector<bool>& real);

// Targets B(r, 2), each assigned a distinct reserve cop that can get next to it
// in two moves (diameter <= 3). Throws StrategyFailure when the reserve is
// too small and PreconditionError when a reserve cop is more than 3 away.
struct EndgamePlan {
  VertexSet targets;
  std::vector<std::pair<int, Vertex>> assignment;  // (reserve index, target)
};
EndgamePlan diam3_endgame(const DistanceOracle& oracle, Vertex r, const std::vector<Vertex>& reserve);

// ---------------------------------------------------------------------------
// Full strategy

struct CoverConfig {
  double alpha = 0.4;
  double slack = 1;        // multiplies every sampling density
  int rho = 0;             // 0: floor((girth + 1) / 4), capped by the diameter
  int densify_cycles = 1;  // imaginary-team cycles after the first real one
  int endgame = -1;        // -1: on iff diameter <= 3; 0 off; 1 on
  int verify_trials = 64;
  std::uint64_t seed = 0;
  std::optional<int> cop_budget;  // >= n: one cop on every vertex
};

class CoverStrategy final : public CopStrategy {
 public:
  CoverStrategy(const Graph& g, CoverConfig config);
  std::string name() const override { return "cover"; }
  // Real tokens plus two per guarding pair; n when saturated.
  int cops_needed() const;
  bool saturated() const { return saturated_; }
  int rho() const { return rho_; }
  int guard_pairs() const { return static_cast<int>(pairs_.size()); }

  Multiset place(int k, std::uint64_t seed) override;
  Multiset move(const GameState& state) override;
  Json diagnostics() const override { return stages_; }

 private:
  struct Token {
    Vertex home = 0;
    Vertex pos = 0;
    bool real = true;
    std::optional<Vertex> target;
    Dispatch mode = Dispatch::Occupy;
  };
  struct Team {
    int cycle = 0;
    int stage = 0;
    std::vector<int> tokens;
    double p = 0;
    CoverSet cover;
  };
  struct Pair {
    GuardAssignment ga;
    bool active = false;
  };
  struct Active {
    int team = -1;  // -1: endgame
    StagePlan plan;
    int start = 0;
    int completion = 0;
  };

  void plan_teams();
  void add_team(int cycle, int stage, double p_outer, double p_real, std::uint64_t stream);
  int stage_count() const { return k_stages_ + 1; }
  void start_stage(int cycle, int stage, const VertexSet& base, Vertex r, int round);
  bool try_endgame(Vertex r, int round);
  void advance(Vertex r, int round);
  [[noreturn]] void exhausted(Vertex r, int round, const std::string& why);
  std::vector<Vertex> positions() const;

  const Graph& g_;
  DistanceOracle oracle_;
  CoverConfig config_;
  int n_ = 0;
  int diameter_ = 0;
  int rho_ = 1;
  int k_stages_ = 0;
  bool endgame_enabled_ = false;
  bool saturated_ = false;
  double p_real_ = 1;

  std::vector<Token> tokens_;
  std::vector<Team> teams_;
  std::vector<Pair> pairs_;
  std::vector<int> reserve_;    // token indices
  std::vector<int> physical_;   // real token indices, in cop order; pairs follow
  std::optional<Active> active_;
  int cycle_ = 0;
  bool endgame_started_ = false;
  Json stages_ = Json::array();
};

// Throws PreconditionError for a disconnected graph. Plays CoverStrategy with
// exactly the cops it plans to use against `robber`.
Transcript run_full_strategy(const Graph& g, const CoverConfig& config, RobberStrategy& robber, int max_rounds);

// Baseline: k cops spread over the vertex range, each walking a shortest
// path toward the robber.
class TrivialStrategy final : public CopStrategy {
 public:
  explicit TrivialStrategy(const Digraph& d);
  std::string name() const override { return "trivial"; }
  Multiset place(int k, std::uint64_t seed) override;
  Multiset move(const GameState& state) override;

 private:
  const Digraph& d_;
  DistanceOracle oracle_;
};

}  // namespace copsrobbers
