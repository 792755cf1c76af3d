#include "copsrobbers/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "copsrobbers/bounds.hpp"

namespace copsrobbers {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr int kMaxResamples = 10000;

CoverSet sample_from(const VertexSet& pool, double p, std::uint64_t seed) {
  if (!(p > 0 && p <= 1)) throw PreconditionError("sampling probability must lie in (0, 1]");
  CoverSet c;
  c.p = p;
  const double cap = 2.0 * static_cast<double>(pool.size()) * p;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    std::bernoulli_distribution keep(p);
    c.vertices.clear();
    for (Vertex v : pool) {
      if (keep(rng)) c.vertices.push_back(v);
    }
    c.attempts = attempt + 1;
    if (p == 1 || static_cast<double>(c.vertices.size()) <= cap) return c;
  }
  throw BudgetExceeded("could not draw a set of size at most 2np");
}

}  // namespace

CoverSet sample_cover_set(int n, double p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("negative order");
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return sample_from(all, p, seed);
}

CoverSet sample_nested(const VertexSet& outer, double p, std::uint64_t seed) { return sample_from(outer, p, seed); }

double cover_threshold(int n, double p) {
  const double log_n = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  return log_n * log_n / p;
}

bool cover_property_holds(const DistanceOracle& oracle, const VertexSet& c, double p, const VertexSet& a, int i,
                          double scale) {
  if (a.empty()) return true;
  const auto b = oracle.ball(a, i);
  if (static_cast<double>(b.size()) < scale * static_cast<double>(a.size()) * cover_threshold(oracle.order(), p)) {
    return true;
  }
  std::size_t hit = 0;
  for (Vertex v : b) hit += set_contains(c, v);
  return hit >= a.size();
}

CoverReport verify_cover_property(const DistanceOracle& oracle, const VertexSet& c, double p, int trials,
                                  std::uint64_t seed, double threshold_scale) {
  if (trials < 1) throw PreconditionError("verify_cover_property needs trials >= 1");
  const int n = oracle.order();
  const double per_element = threshold_scale * cover_threshold(n, p);
  std::vector<std::uint8_t> in_c(n, 0);
  for (Vertex v : c) in_c[v] = 1;
  CoverReport rep;

  // Smallest radius whose ball reaches the threshold, then check that ball.
  auto check = [&](const VertexSet& a) {
    auto dist = bfs_distances(oracle.digraph(), a);
    std::vector<int> reached;
    for (int d : dist) {
      if (d != kUnreachable) reached.push_back(d);
    }
    std::sort(reached.begin(), reached.end());
    const double need = per_element * static_cast<double>(a.size());
    const auto idx = static_cast<std::size_t>(std::max(0.0, std::ceil(need)));
    if (idx > reached.size()) return;  // no radius qualifies
    const int radius = idx == 0 ? 0 : reached[idx - 1];
    ++rep.qualifying;
    std::size_t hit = 0;
    for (Vertex v = 0; v < n; ++v) hit += in_c[v] && dist[v] <= radius;
    if (hit < a.size()) ++rep.failures;
  };

  if (n <= 12) {
    rep.exhaustive = true;
    for (Vertex x = 0; x < n; ++x) {
      ++rep.trials;
      check({x});
      for (Vertex y = x + 1; y < n; ++y) {
        ++rep.trials;
        check({x, y});
        for (Vertex z = y + 1; z < n; ++z) {
          ++rep.trials;
          check({x, y, z});
        }
      }
    }
    return rep;
  }

  const int max_size = per_element <= 0 ? n : std::min(n, static_cast<int>(std::floor(n / per_element)));
  rep.trials = trials;
  if (max_size < 1) return rep;  // nothing can qualify at this n
  auto rng = make_rng(seed, 0xC0);
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < trials; ++t) {
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    VertexSet a;
    std::sample(all.begin(), all.end(), std::back_inserter(a), size, rng);
    check(a);
  }
  return rep;
}

StagePlan escalation_round(const DistanceOracle& oracle, const VertexSet& base, int radius, int ell, Dispatch mode,
                           const std::vector<Vertex>& team, const std::vector<bool>& real) {
  if (team.size() != real.size()) throw PreconditionError("team and realness flags differ in length");
  StagePlan plan;
  plan.base = base;
  plan.radius = radius;
  plan.ell = ell;
  plan.mode = mode;
  plan.left = oracle.ball(base, radius);

  std::vector<int> token_at(oracle.order(), -1);
  for (std::size_t i = 0; i < team.size(); ++i) {
    if (token_at[team[i]] != -1) throw PreconditionError("team positions must be distinct");
    token_at[team[i]] = static_cast<int>(i);
  }
  for (Vertex v : plan.left) {
    if (token_at[v] != -1) plan.held.push_back(v);
  }
  // Built by hand: a token standing on a left vertex stays on both sides and
  // can cover it at distance 0 (build_reach_graph would drop it from the left).
  ReachGraph& h = plan.reach;
  h.left = plan.left;
  h.right = make_vertex_set(team);
  h.radius = ell;
  h.edges.left = static_cast<int>(h.left.size());
  h.edges.right = static_cast<int>(h.right.size());
  h.edges.adjacency.resize(h.left.size());
  for (std::size_t i = 0; i < h.left.size(); ++i) {
    for (std::size_t j = 0; j < h.right.size(); ++j) {
      if (oracle.distance(h.right[j], h.left[i]) <= ell) h.edges.adjacency[i].push_back(static_cast<int>(j));
    }
  }
  plan.matching = max_matching(h);
  for (const auto& [target, from] : plan.matching.pairs) plan.dispatch.emplace_back(token_at[from], target);
  plan.left_perfect = plan.matching.left_perfect();
  plan.physical =
      plan.left_perfect && std::all_of(plan.dispatch.begin(), plan.dispatch.end(), [&](const auto& d) { return real[d.first]; });
  plan.violator = plan.matching.violator;
  return plan;
}

EndgamePlan diam3_endgame(const DistanceOracle& oracle, Vertex r, const std::vector<Vertex>& reserve) {
  EndgamePlan plan;
  plan.targets = oracle.ball(std::vector<Vertex>{r}, 2);
  if (plan.targets.size() > reserve.size()) {
    throw StrategyFailure("endgame needs " + std::to_string(plan.targets.size()) + " cops for B(r, 2), reserve has " +
                          std::to_string(reserve.size()));
  }
  Bipartite h;
  h.left = static_cast<int>(plan.targets.size());
  h.right = static_cast<int>(reserve.size());
  h.adjacency.resize(plan.targets.size());
  for (std::size_t i = 0; i < plan.targets.size(); ++i) {
    for (std::size_t j = 0; j < reserve.size(); ++j) {
      if (oracle.distance(reserve[j], plan.targets[i]) <= 3) h.adjacency[i].push_back(static_cast<int>(j));
    }
  }
  auto mate = maximum_matching(h);
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (mate[i] < 0) throw PreconditionError("endgame needs every reserve cop within distance 3 (diameter <= 3)");
    plan.assignment.emplace_back(mate[i], plan.targets[i]);
  }
  return plan;
}

// ---------------------------------------------------------------------------

CoverStrategy::CoverStrategy(const Graph& g, CoverConfig config)
    : g_(g), oracle_(g.as_digraph()), config_(config), n_(g.order()) {
  if (n_ == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("cover strategy needs a connected graph");
  if (!(config_.alpha > 0 && config_.alpha < 1)) throw PreconditionError("alpha must lie in (0, 1)");
  if (!(config_.slack > 0)) throw PreconditionError("slack must be positive");
  if (config_.densify_cycles < 0) throw PreconditionError("densify_cycles must be non-negative");
  if (config_.cop_budget && *config_.cop_budget < 1) throw PreconditionError("cop budget must be positive");
  diameter_ = diameter(g);
  rho_ = config_.rho > 0 ? config_.rho : std::min(protected_radius(g), std::max(1, diameter_));
  k_stages_ = ceil_log2_ratio(std::max(1, diameter_), rho_);
  endgame_enabled_ = config_.endgame == 1 || (config_.endgame == -1 && diameter_ <= 3);
  p_real_ = std::min(1.0, config_.slack * std::pow(static_cast<double>(n_), -config_.alpha));

  auto saturate = [&] {
    saturated_ = true;
    tokens_.clear();
    teams_.clear();
    pairs_.clear();
    reserve_.clear();
    physical_.clear();
    stages_ = Json::array({{{"kind", "saturated"}, {"cops", n_}}});
  };
  if (config_.cop_budget && *config_.cop_budget >= n_) {
    saturate();
    return;
  }
  plan_teams();
  if (config_.cop_budget) {
    for (int attempt = 0; cops_needed() > *config_.cop_budget; ++attempt) {
      if (attempt == 32) {
        throw StrategyFailure("cop budget " + std::to_string(*config_.cop_budget) + " is below the " +
                              std::to_string(cops_needed()) + " cops the smallest team plan needs");
      }
      p_real_ *= 0.95 * static_cast<double>(*config_.cop_budget) / static_cast<double>(cops_needed());
      plan_teams();
    }
  } else if (cops_needed() >= n_) {
    saturate();
    return;
  }
  if (cops_needed() == 0) throw StrategyFailure("sampled plan has no real cops; raise slack or the budget");
}

void CoverStrategy::add_team(int cycle, int stage, double p_outer, double p_real, std::uint64_t stream) {
  Team team;
  team.cycle = cycle;
  team.stage = stage;
  team.p = p_outer;
  // Resample against the sampled verifier, at most 32 draws.
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto seed = mix(mix(config_.seed, stream), static_cast<std::uint64_t>(attempt));
    auto c = sample_cover_set(n_, p_outer, seed);
    auto rep = verify_cover_property(oracle_, c.vertices, p_outer, config_.verify_trials, seed);
    c.verified = rep.passed();
    c.trials = rep.qualifying;
    c.failures = rep.failures;
    c.attempts = attempt + 1;
    team.cover = std::move(c);
    if (team.cover.verified) break;
  }
  VertexSet real_set = team.cover.vertices;
  if (p_real < p_outer) {
    real_set = sample_nested(team.cover.vertices, p_real / p_outer, mix(config_.seed, stream ^ 0x5EA1)).vertices;
  }
  for (Vertex v : team.cover.vertices) {
    team.tokens.push_back(static_cast<int>(tokens_.size()));
    tokens_.push_back({v, v, set_contains(real_set, v), std::nullopt, Dispatch::Occupy});
  }
  teams_.push_back(std::move(team));
}

void CoverStrategy::plan_teams() {
  tokens_.clear();
  teams_.clear();
  pairs_.clear();
  reserve_.clear();
  physical_.clear();
  std::uint64_t stream = 1;
  const double alpha = config_.alpha;
  for (int cycle = 0; cycle <= config_.densify_cycles; ++cycle) {
    double p_outer = p_real_;
    if (cycle > 0) {
      const double gamma = (1 - 2 * alpha) * (1 - std::ldexp(1.0, -cycle));
      p_outer = std::max(p_real_, std::min(1.0, config_.slack * std::pow(static_cast<double>(n_), -gamma)));
    }
    for (int stage = 0; stage < stage_count(); ++stage) add_team(cycle, stage, p_outer, p_real_, stream++);
  }
  if (rho_ >= 2) {
    auto centers = sample_cover_set(n_, p_real_, mix(config_.seed, 0xA1A1));
    for (Vertex u : centers.vertices) pairs_.push_back({GuardAssignment::at(u, rho_), false});
  }
  if (endgame_enabled_) {
    const double gamma = std::max(0.0, 1 - 2 * alpha);
    const double exponent = std::max(0.0, 2 * alpha - 2 * gamma);
    const double scale = p_real_ / std::min(1.0, config_.slack * std::pow(static_cast<double>(n_), -alpha));
    int size = static_cast<int>(std::ceil(config_.slack * scale * std::pow(static_cast<double>(n_), exponent)));
    size = std::clamp(size, 1, n_);
    auto rng = make_rng(mix(config_.seed, 0xE11D), 0);
    VertexSet all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 0);
    VertexSet spots;
    std::sample(all.begin(), all.end(), std::back_inserter(spots), size, rng);
    for (Vertex v : spots) {
      reserve_.push_back(static_cast<int>(tokens_.size()));
      tokens_.push_back({v, v, true, std::nullopt, Dispatch::Guard});
    }
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].real) physical_.push_back(static_cast<int>(i));
  }
}

int CoverStrategy::cops_needed() const {
  if (saturated_) return n_;
  return static_cast<int>(physical_.size() + 2 * pairs_.size());
}

std::vector<Vertex> CoverStrategy::positions() const {
  std::vector<Vertex> out;
  for (int i : physical_) out.push_back(tokens_[i].pos);
  for (const auto& p : pairs_) {
    out.push_back(p.ga.follower);
    out.push_back(p.ga.anchor);
  }
  return out;
}

Multiset CoverStrategy::place(int k, std::uint64_t) {
  if (saturated_) {
    if (k < n_) throw PreconditionError("saturated cover needs one cop per vertex");
    std::vector<Vertex> all(static_cast<std::size_t>(k), 0);
    std::iota(all.begin(), all.begin() + n_, 0);
    return make_multiset(all);
  }
  if (k != cops_needed()) {
    throw PreconditionError("cover strategy plans " + std::to_string(cops_needed()) + " cops, got " +
                            std::to_string(k));
  }
  for (auto& t : tokens_) {
    t.pos = t.home;
    t.target.reset();
  }
  for (auto& p : pairs_) p = {GuardAssignment::at(p.ga.u, rho_), false};
  active_.reset();
  cycle_ = 0;
  endgame_started_ = false;
  stages_ = Json::array();
  return make_multiset(positions());
}

void CoverStrategy::start_stage(int cycle, int stage, const VertexSet& base, Vertex, int round) {
  Team& team = teams_[static_cast<std::size_t>(cycle * stage_count() + stage)];
  int radius = 1;
  int ell = 2;
  Dispatch mode = Dispatch::Guard;
  if (stage == 0 && rho_ >= 2) {
    radius = ell = rho_;
    mode = Dispatch::Occupy;
  } else if (stage >= 1) {
    radius = ell = std::min(rho_ << std::min(stage, 20), std::max(2, diameter_));
    mode = Dispatch::Occupy;
  }
  std::vector<Vertex> where;
  std::vector<bool> real;
  for (int i : team.tokens) {
    where.push_back(tokens_[i].pos);
    real.push_back(tokens_[i].real);
  }
  auto plan = escalation_round(oracle_, base, radius, ell, mode, where, real);
  for (const auto& [idx, target] : plan.dispatch) {
    auto& tok = tokens_[team.tokens[idx]];
    tok.target = target;
    tok.mode = mode;
  }
  const int completion = mode == Dispatch::Guard ? round + 1 : round + ell - 1;

  Json s;
  s["kind"] = "stage";
  s["cycle"] = cycle;
  s["stage"] = stage;
  s["round"] = round;
  s["mode"] = mode == Dispatch::Guard ? "guard" : "occupy";
  s["radius"] = radius;
  s["ell"] = ell;
  s["base"] = base;
  s["left"] = plan.left.size();
  s["held"] = plan.held.size();
  s["right"] = plan.reach.right.size();
  s["matching"] = plan.matching.pairs.size();
  s["left_perfect"] = plan.left_perfect;
  s["pinned"] = plan.physical;
  s["violator"] = plan.violator ? Json(*plan.violator) : Json(nullptr);
  s["violator_neighbors"] = plan.matching.violator_neighbors.size();
  s["team"] = team.tokens.size();
  s["team_real"] = std::count(real.begin(), real.end(), true);
  s["p"] = team.p;
  s["verified"] = team.cover.verified;
  s["cops"] = cops_needed();
  stages_.push_back(s);
  active_ = Active{cycle * stage_count() + stage, std::move(plan), round, completion};
}

bool CoverStrategy::try_endgame(Vertex r, int round) {
  if (!endgame_enabled_ || endgame_started_ || reserve_.empty()) return false;
  std::vector<Vertex> where;
  for (int i : reserve_) where.push_back(tokens_[i].pos);
  EndgamePlan plan;
  try {
    plan = diam3_endgame(oracle_, r, where);
  } catch (const StrategyFailure&) {
    return false;
  } catch (const PreconditionError&) {
    return false;
  }
  for (const auto& [idx, target] : plan.assignment) {
    auto& tok = tokens_[reserve_[idx]];
    tok.target = target;
    tok.mode = Dispatch::Guard;
  }
  endgame_started_ = true;
  StagePlan marker;
  marker.base = {r};
  marker.radius = 2;
  marker.ell = 2;
  marker.mode = Dispatch::Guard;
  marker.left = plan.targets;
  marker.left_perfect = marker.physical = true;
  stages_.push_back({{"kind", "endgame"},
                     {"round", round},
                     {"ell", 2},
                     {"base", VertexSet{r}},
                     {"targets", plan.targets.size()},
                     {"reserve", reserve_.size()},
                     {"pinned", true}});
  active_ = Active{-1, std::move(marker), round, round + 2};
  return true;
}

void CoverStrategy::exhausted(Vertex r, int round, const std::string& why) {
  stages_.push_back({{"kind", "exhausted"}, {"round", round}, {"robber", r}, {"cycle", cycle_}, {"reason", why}});
  throw StrategyFailure("cover strategy ran out of teams: " + why);
}

void CoverStrategy::advance(Vertex r, int round) {
  const Active current = *active_;
  const StagePlan& plan = current.plan;
  if (plan.physical) {
    throw InvariantViolation("robber escaped a pinned stage (round " + std::to_string(current.start) + ", ell " +
                             std::to_string(plan.ell) + ")");
  }
  bool covered = false;
  for (const auto& [idx, target] : plan.dispatch) covered = covered || target == r;
  if (covered) {
    // Only an imaginary token covers r (a real one would have taken it).
    stages_.push_back({{"kind", "realness_failure"}, {"round", round}, {"cycle", cycle_}, {"robber", r}});
  } else if (!plan.violator || !set_contains(*plan.violator, r)) {
    throw InvariantViolation("robber at " + std::to_string(r) + " left its confinement set");
  } else {
    if (try_endgame(r, round)) return;
    const auto& team = teams_[static_cast<std::size_t>(current.team)];
    if (team.stage < k_stages_) {
      start_stage(cycle_, team.stage + 1, *plan.violator, r, round);
      return;
    }
  }
  if (try_endgame(r, round)) return;
  if (cycle_ >= config_.densify_cycles) {
    const auto& team = teams_[static_cast<std::size_t>(current.team)];
    std::string where = "cycle " + std::to_string(cycle_) + " stage " + std::to_string(team.stage) + ": ";
    if (covered) {
      exhausted(r, round,
                where + "only imaginary cops covered the robber's vertex (real fraction " +
                    std::to_string(p_real_ / team.p) + ") and no densification cycle is left");
    }
    const double threshold = static_cast<double>(plan.base.size()) * cover_threshold(n_, team.p);
    exhausted(r, round,
              where + "|S| = " + std::to_string(plan.violator->size()) + " > |N(S)| = " +
                  std::to_string(plan.matching.violator_neighbors.size()) + " with |B(S, ell)| = " +
                  std::to_string(plan.left.size()) + "; the cover bound only applies from " +
                  std::to_string(static_cast<long long>(std::ceil(threshold))) + " vertices");
  }
  ++cycle_;
  start_stage(cycle_, 0, {r}, r, round);
}

Multiset CoverStrategy::move(const GameState& state) {
  if (saturated_) return state.cops;
  const Vertex r = *state.robber;
  const int round = state.round;
  if (make_multiset(positions()) != state.cops) throw InvariantViolation("cover strategy lost track of its cops");
  const Digraph& d = g_.as_digraph();
  auto reach = [&](Vertex c) { return c == r || d.has_arc(c, r); };

  for (int i : physical_) {
    if (reach(tokens_[i].pos)) {
      tokens_[i].pos = r;
      return make_multiset(positions());
    }
  }
  for (auto& p : pairs_) {
    if (reach(p.ga.follower)) {
      p.ga.follower = r;
      return make_multiset(positions());
    }
    if (reach(p.ga.anchor)) {
      p.ga.anchor = r;
      return make_multiset(positions());
    }
  }

  if (!active_) {
    if (!try_endgame(r, round)) start_stage(0, 0, {r}, r, round);
  } else if (round >= active_->completion) {
    if (active_->team == -1) throw InvariantViolation("robber escaped the endgame");
    advance(r, round);
  }

  for (auto& t : tokens_) {
    if (!t.target) continue;
    const bool arrived = t.mode == Dispatch::Occupy ? t.pos == *t.target : oracle_.distance(t.pos, *t.target) <= 1;
    if (!arrived) t.pos = oracle_.next_step(t.pos, *t.target);
  }
  for (auto& p : pairs_) {
    if (!p.active && oracle_.distance(p.ga.u, r) > 2 * rho_ - 2) p.active = true;
    if (!p.active) continue;
    p.ga = guard_move(oracle_, p.ga, r);
    if (!guard_invariant(oracle_, p.ga, r)) {
      throw InvariantViolation("guard pair at " + std::to_string(p.ga.u) + " broke its invariant");
    }
  }
  return make_multiset(positions());
}

Transcript run_full_strategy(const Graph& g, const CoverConfig& config, RobberStrategy& robber, int max_rounds) {
  if (!is_connected(g)) throw PreconditionError("cover strategy needs a connected graph");
  CoverStrategy cops(g, config);
  const int k = cops.saturated() ? std::max(g.order(), config.cop_budget.value_or(0)) : cops.cops_needed();
  return play(g, cops, robber, k, max_rounds, config.seed);
}

TrivialStrategy::TrivialStrategy(const Digraph& d) : d_(d), oracle_(d) {}

Multiset TrivialStrategy::place(int k, std::uint64_t) {
  if (k < 1) throw PreconditionError("trivial strategy needs at least one cop");
  std::vector<Vertex> at;
  const auto n = static_cast<long long>(d_.order());
  for (int i = 0; i < k; ++i) at.push_back(static_cast<Vertex>(i * n / k));
  return make_multiset(at);
}

Multiset TrivialStrategy::move(const GameState& state) {
  std::vector<Vertex> next;
  for (Vertex c : state.cops) next.push_back(oracle_.next_step(c, *state.robber));
  return make_multiset(next);
}

}  // namespace copsrobbers
