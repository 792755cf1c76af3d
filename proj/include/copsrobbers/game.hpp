#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copsrobbers/graph.hpp"

namespace copsrobbers {

using Json = nlohmann::ordered_json;

enum class Side { Cops, Robber };

struct GameState {
  Multiset cops;                  // sorted
  std::optional<Vertex> robber;   // empty before placement
  Side to_move = Side::Cops;
  int round = 0;                  // cop moves made so far, plus the one in progress

  bool captured() const;
};

// Cop decisions. An instance owns its board reference and whatever memory it
// threads between calls; one instance plays one game at a time.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  // Initial multiset of exactly k positions.
  virtual Multiset place(int k, std::uint64_t seed) = 0;
  // New multiset; every cop stays or follows one arc.
  virtual Multiset move(const GameState& state) = 0;
  // Free-form per-stage data copied into the transcript under "stages".
  virtual Json diagnostics() const { return Json::array(); }
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Multiset& cops) = 0;
  // Current vertex or one of its out-neighbours.
  virtual Vertex move(const GameState& state) = 0;
};

enum class OutcomeKind { Captured, Survived, IllegalMove, StrategyError };

struct Outcome {
  OutcomeKind kind = OutcomeKind::Survived;
  int round = 0;
  // Captured: "placement", "cops" or "robber" (robber stepped onto a cop).
  // IllegalMove / StrategyError: the side at fault.
  std::string detail;
  std::string reason;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct RoundRecord {
  int round = 0;
  Multiset cops;                 // after the cops' move
  std::optional<Vertex> robber;  // after the robber's move; empty if captured first
};

struct Transcript {
  std::string graph;   // graph6 for symmetric boards, arc list otherwise
  std::string format;  // "graph6" or "arcs"
  int k = 0;
  std::uint64_t seed = 0;
  int max_rounds = 0;
  std::string cop_strategy;
  std::string robber_strategy;
  Multiset placement_cops;
  std::optional<Vertex> placement_robber;
  std::vector<RoundRecord> rounds;
  Outcome outcome;
  Json stages = Json::array();
};

// 4 n^2 (k + 1): well past any forced-capture horizon at desk scale.
int default_max_rounds(int n, int k);

// True iff some perfect matching pairs old and new positions so that each
// new position equals its old one or is an out-neighbour of it.
bool validate_move(const Multiset& from, const Multiset& to, const Digraph& board);
bool validate_move(const Multiset& from, const Multiset& to, const Graph& board);

// Referee: cops place, robber places, then rounds of (cops move, capture
// check, robber moves, capture check). Illegal moves end the game with a
// fault verdict; a strategy exception ends it with StrategyError, except
// BudgetExceeded and InvariantViolation which propagate.
Transcript play(const Digraph& board, CopStrategy& cops, RobberStrategy& robber, int k, int max_rounds,
                std::uint64_t seed);
Transcript play(const Graph& board, CopStrategy& cops, RobberStrategy& robber, int k, int max_rounds,
                std::uint64_t seed);

// Re-checks every recorded move and recomputes the outcome from the record.
Outcome replay(const Digraph& board, const Transcript& t);

Json to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j);
Json to_json(const Outcome& o);

std::string to_string(OutcomeKind kind);

}  // namespace copsrobbers
