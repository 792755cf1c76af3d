#include "copsrobbers/game.hpp"

#include <algorithm>

#include "copsrobbers/graph_io.hpp"
#include "copsrobbers/matching.hpp"

namespace copsrobbers {

bool GameState::captured() const {
  return robber && std::binary_search(cops.begin(), cops.end(), *robber);
}

int default_max_rounds(int n, int k) {
  long long rounds = 4LL * n * n * (k + 1);
  return static_cast<int>(std::clamp<long long>(rounds, 1, 1 << 30));
}

bool validate_move(const Multiset& from, const Multiset& to, const Digraph& board) {
  if (from.size() != to.size()) return false;
  for (Vertex v : to) {
    if (!board.valid_vertex(v)) return false;
  }
  Bipartite h;
  h.left = static_cast<int>(from.size());
  h.right = static_cast<int>(to.size());
  h.adjacency.resize(from.size());
  for (int i = 0; i < h.left; ++i) {
    if (!board.valid_vertex(from[i])) return false;
    for (int j = 0; j < h.right; ++j) {
      if (from[i] == to[j] || board.has_arc(from[i], to[j])) h.adjacency[i].push_back(j);
    }
  }
  auto mate = maximum_matching(h);
  return std::none_of(mate.begin(), mate.end(), [](int m) { return m < 0; });
}

bool validate_move(const Multiset& from, const Multiset& to, const Graph& board) {
  return validate_move(from, to, board.as_digraph());
}

namespace {

bool robber_step_ok(const Digraph& board, Vertex from, Vertex to) {
  return board.valid_vertex(to) && (from == to || board.has_arc(from, to));
}

bool occupied(const Multiset& cops, Vertex v) { return std::binary_search(cops.begin(), cops.end(), v); }

Outcome fault(OutcomeKind kind, int round, Side side, std::string reason) {
  return {kind, round, side == Side::Cops ? "cops" : "robber", std::move(reason)};
}

void describe_board(const Digraph& board, Transcript& t) {
  if (board.is_symmetric()) {
    t.graph = write_graph6(to_graph(board));
    t.format = "graph6";
  } else {
    t.graph = write_digraph_arcs(board);
    t.format = "arcs";
  }
}

}  // namespace

Transcript play(const Digraph& board, CopStrategy& cops, RobberStrategy& robber, int k, int max_rounds,
                std::uint64_t seed) {
  if (k < 1) throw PreconditionError("need at least one cop");
  if (max_rounds < 1) throw PreconditionError("max_rounds must be >= 1");
  if (board.order() < 1) throw PreconditionError("empty board");

  Transcript t;
  describe_board(board, t);
  t.k = k;
  t.seed = seed;
  t.max_rounds = max_rounds;
  t.cop_strategy = cops.name();
  t.robber_strategy = robber.name();

  auto finish = [&](Outcome o) {
    t.outcome = std::move(o);
    t.stages = cops.diagnostics();
    return t;
  };

  GameState state;
  try {
    state.cops = make_multiset(cops.place(k, seed));
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvariantViolation&) {
    throw;
  } catch (const std::exception& e) {
    return finish(fault(OutcomeKind::StrategyError, 0, Side::Cops, e.what()));
  }
  t.placement_cops = state.cops;
  if (static_cast<int>(state.cops.size()) != k ||
      !std::all_of(state.cops.begin(), state.cops.end(), [&](Vertex v) { return board.valid_vertex(v); })) {
    return finish(fault(OutcomeKind::IllegalMove, 0, Side::Cops, "placement must be k valid vertices"));
  }

  Vertex r = 0;
  try {
    r = robber.place(state.cops);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvariantViolation&) {
    throw;
  } catch (const std::exception& e) {
    return finish(fault(OutcomeKind::StrategyError, 0, Side::Robber, e.what()));
  }
  if (!board.valid_vertex(r)) {
    return finish(fault(OutcomeKind::IllegalMove, 0, Side::Robber, "placement outside the board"));
  }
  t.placement_robber = r;
  state.robber = r;
  if (occupied(state.cops, r)) return finish({OutcomeKind::Captured, 0, "placement", ""});

  for (int round = 1; round <= max_rounds; ++round) {
    state.round = round;
    state.to_move = Side::Cops;
    Multiset next;
    try {
      next = make_multiset(cops.move(state));
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const InvariantViolation&) {
      throw;
    } catch (const std::exception& e) {
      return finish(fault(OutcomeKind::StrategyError, round, Side::Cops, e.what()));
    }
    if (!validate_move(state.cops, next, board)) {
      t.rounds.push_back({round, next, std::nullopt});
      return finish(fault(OutcomeKind::IllegalMove, round, Side::Cops, "cop multiset move is not legal"));
    }
    state.cops = std::move(next);
    if (occupied(state.cops, *state.robber)) {
      t.rounds.push_back({round, state.cops, std::nullopt});
      return finish({OutcomeKind::Captured, round, "cops", ""});
    }

    state.to_move = Side::Robber;
    Vertex step = 0;
    try {
      step = robber.move(state);
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const InvariantViolation&) {
      throw;
    } catch (const std::exception& e) {
      t.rounds.push_back({round, state.cops, std::nullopt});
      return finish(fault(OutcomeKind::StrategyError, round, Side::Robber, e.what()));
    }
    t.rounds.push_back({round, state.cops, step});
    if (!robber_step_ok(board, *state.robber, step)) {
      return finish(fault(OutcomeKind::IllegalMove, round, Side::Robber, "robber step is not legal"));
    }
    state.robber = step;
    if (occupied(state.cops, step)) return finish({OutcomeKind::Captured, round, "robber", ""});
  }
  return finish({OutcomeKind::Survived, max_rounds, "", ""});
}

Transcript play(const Graph& board, CopStrategy& cops, RobberStrategy& robber, int k, int max_rounds,
                std::uint64_t seed) {
  return play(board.as_digraph(), cops, robber, k, max_rounds, seed);
}

Outcome replay(const Digraph& board, const Transcript& t) {
  const Multiset& placed = t.placement_cops;
  if (static_cast<int>(placed.size()) != t.k ||
      !std::all_of(placed.begin(), placed.end(), [&](Vertex v) { return board.valid_vertex(v); })) {
    return fault(OutcomeKind::IllegalMove, 0, Side::Cops, "placement must be k valid vertices");
  }
  if (!t.placement_robber) return t.outcome;  // placement never completed
  if (!board.valid_vertex(*t.placement_robber)) {
    return fault(OutcomeKind::IllegalMove, 0, Side::Robber, "placement outside the board");
  }
  Multiset cops = placed;
  Vertex r = *t.placement_robber;
  if (occupied(cops, r)) return {OutcomeKind::Captured, 0, "placement", ""};
  for (const auto& rec : t.rounds) {
    if (!validate_move(cops, rec.cops, board)) {
      return fault(OutcomeKind::IllegalMove, rec.round, Side::Cops, "cop multiset move is not legal");
    }
    cops = rec.cops;
    if (occupied(cops, r)) return {OutcomeKind::Captured, rec.round, "cops", ""};
    if (!rec.robber) return t.outcome;  // strategy error after the cops' move
    if (!robber_step_ok(board, r, *rec.robber)) {
      return fault(OutcomeKind::IllegalMove, rec.round, Side::Robber, "robber step is not legal");
    }
    r = *rec.robber;
    if (occupied(cops, r)) return {OutcomeKind::Captured, rec.round, "robber", ""};
  }
  if (t.outcome.kind == OutcomeKind::StrategyError) return t.outcome;
  return {OutcomeKind::Survived, t.max_rounds, "", ""};
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Captured: return "captured";
    case OutcomeKind::Survived: return "survived";
    case OutcomeKind::IllegalMove: return "illegal_move";
    case OutcomeKind::StrategyError: return "strategy_error";
  }
  return "unknown";
}

Json to_json(const Outcome& o) {
  Json j;
  j["result"] = to_string(o.kind);
  j["round"] = o.round;
  if (!o.detail.empty()) j["detail"] = o.detail;
  if (!o.reason.empty()) j["reason"] = o.reason;
  return j;
}

Json to_json(const Transcript& t) {
  Json j;
  j["graph"] = t.graph;
  j["format"] = t.format;
  j["k"] = t.k;
  j["seed"] = t.seed;
  j["max_rounds"] = t.max_rounds;
  j["cop_strategy"] = t.cop_strategy;
  j["robber_strategy"] = t.robber_strategy;
  Json placement;
  placement["cops"] = t.placement_cops;
  placement["robber"] = t.placement_robber ? Json(*t.placement_robber) : Json(nullptr);
  j["placement"] = placement;
  Json rounds = Json::array();
  for (const auto& rec : t.rounds) {
    Json r;
    r["round"] = rec.round;
    r["cops"] = rec.cops;
    r["robber"] = rec.robber ? Json(*rec.robber) : Json(nullptr);
    rounds.push_back(std::move(r));
  }
  j["rounds"] = std::move(rounds);
  j["outcome"] = to_json(t.outcome);
  j["stages"] = t.stages;
  return j;
}

namespace {

OutcomeKind outcome_kind(const std::string& s) {
  for (auto kind : {OutcomeKind::Captured, OutcomeKind::Survived, OutcomeKind::IllegalMove, OutcomeKind::StrategyError}) {
    if (to_string(kind) == s) return kind;
  }
  throw ParseError("unknown outcome '" + s + "'");
}

}  // namespace

Transcript transcript_from_json(const Json& j) {
  try {
    Transcript t;
    t.graph = j.at("graph").get<std::string>();
    t.format = j.at("format").get<std::string>();
    t.k = j.at("k").get<int>();
    t.seed = j.at("seed").get<std::uint64_t>();
    t.max_rounds = j.at("max_rounds").get<int>();
    t.cop_strategy = j.at("cop_strategy").get<std::string>();
    t.robber_strategy = j.at("robber_strategy").get<std::string>();
    t.placement_cops = j.at("placement").at("cops").get<Multiset>();
    const auto& pr = j.at("placement").at("robber");
    if (!pr.is_null()) t.placement_robber = pr.get<Vertex>();
    for (const auto& r : j.at("rounds")) {
      RoundRecord rec;
      rec.round = r.at("round").get<int>();
      rec.cops = r.at("cops").get<Multiset>();
      if (!r.at("robber").is_null()) rec.robber = r.at("robber").get<Vertex>();
      t.rounds.push_back(std::move(rec));
    }
    const auto& o = j.at("outcome");
    t.outcome.kind = outcome_kind(o.at("result").get<std::string>());
    t.outcome.round = o.at("round").get<int>();
    t.outcome.detail = o.value("detail", "");
    t.outcome.reason = o.value("reason", "");
    t.stages = j.value("stages", Json::array());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("transcript: ") + e.what());
  }
}

}  // namespace copsrobbers
