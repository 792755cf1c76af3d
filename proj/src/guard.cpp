#include "copsrobbers/guard.hpp"

#include <algorithm>

#include "copsrobbers/bounds.hpp"

namespace copsrobbers {

int protected_radius(const Graph& g) {
  const int gi = girth(g);
  if (gi == kInfiniteGirth) return std::max(1, g.order());
  return guard_radius(gi);
}

Vertex path_vertex(const DistanceOracle& oracle, Vertex u, Vertex r, int k) {
  Vertex v = u;
  for (int i = 0; i < k && v != r; ++i) v = oracle.next_step(v, r);
  return v;
}

namespace {

bool step_ok(const Digraph& d, Vertex from, Vertex to) { return from == to || d.has_arc(from, to); }

}  // namespace

GuardAssignment guard_move(const DistanceOracle& oracle, const GuardAssignment& ga, Vertex r) {
  const Digraph& d = oracle.digraph();
  GuardAssignment next = ga;
  if (step_ok(d, ga.follower, r)) {
    next.follower = r;
    return next;
  }
  if (step_ok(d, ga.anchor, r)) {
    next.anchor = r;
    return next;
  }
  const int dist = oracle.distance(ga.u, r);
  if (dist <= ga.rho) {
    throw PreconditionError("robber is inside B(u, rho) out of the pair's reach");
  }
  Vertex target = ga.u;
  next.entry.reset();
  if (dist < 2 * ga.rho) {
    target = path_vertex(oracle, ga.u, r, 2 * ga.rho - dist);
    next.entry = path_vertex(oracle, ga.u, r, ga.rho);
  }
  if (step_ok(d, ga.follower, target) && step_ok(d, ga.anchor, ga.u)) {
    next.follower = target;
    next.anchor = ga.u;
  } else if (step_ok(d, ga.anchor, target) && step_ok(d, ga.follower, ga.u)) {
    next.follower = target;
    next.anchor = ga.u;
  } else {
    throw InvariantViolation("guard pair cannot reach {u, " + std::to_string(target) + "} in one move");
  }
  return next;
}

bool guard_invariant(const DistanceOracle& oracle, const GuardAssignment& ga, Vertex r) {
  const int dist = oracle.distance(ga.u, r);
  if (dist <= ga.rho) return false;
  if (ga.anchor != ga.u) return false;
  if (dist >= 2 * ga.rho) return ga.follower == ga.u;
  const int k = 2 * ga.rho - dist;
  return oracle.distance(ga.u, ga.follower) == k && ga.follower == path_vertex(oracle, ga.u, r, k);
}

VertexSet reachable_entries(const DistanceOracle& oracle, Vertex u, int rho, Vertex r) {
  const Digraph& d = oracle.digraph();
  std::vector<int> dist = bfs_distances(d, r);
  VertexSet out;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v] >= 0 && dist[v] <= rho - 1 && oracle.distance(u, v) == rho) out.push_back(v);
  }
  return out;
}

FlushResult run_flush(const DistanceOracle& oracle, Vertex u, int rho, Vertex chaser, Vertex robber,
                      const RobberPolicy& policy, int max_steps) {
  const Digraph& d = oracle.digraph();
  FlushResult res{false, false, 0, robber, chaser};
  auto outside = [&] { return oracle.distance(u, res.robber) > 2 * rho - 2; };
  if (outside()) {
    res.flushed = true;
    return res;
  }
  while (res.steps < max_steps) {
    ++res.steps;
    // cops: the pair holds u unless it can take the robber; the chaser follows
    if (step_ok(d, u, res.robber) || step_ok(d, res.chaser, res.robber)) {
      res.captured = true;
      return res;
    }
    res.chaser = oracle.next_step(res.chaser, res.robber);
    res.robber = policy(make_multiset({u, u, res.chaser}), res.robber);
    if (res.robber == u || res.robber == res.chaser) {
      res.captured = true;
      return res;
    }
    if (outside()) {
      res.flushed = true;
      return res;
    }
  }
  return res;
}

GuardTrialReport run_guard_trials(const DistanceOracle& oracle, Vertex u, int rho, int trials, int length, double bias,
                                  std::uint64_t seed) {
  const Digraph& d = oracle.digraph();
  GuardTrialReport rep;
  VertexSet starts;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (oracle.distance(u, v) > 2 * rho - 2) starts.push_back(v);
  }
  if (starts.empty()) throw PreconditionError("no vertex outside B(u, 2 rho - 2)");
  auto rng = make_rng(seed, static_cast<std::uint64_t>(u));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    Vertex r = starts[rng() % starts.size()];
    auto ga = GuardAssignment::at(u, rho);
    bool inside = false;
    for (int s = 0; s < length; ++s) {
      ++rep.steps;
      try {
        ga = guard_move(oracle, ga, r);
      } catch (const PreconditionError&) {
        ++rep.uncaptured_entries;
        break;
      } catch (const InvariantViolation&) {
        ++rep.invariant_violations;
        break;
      }
      if (ga.captures(r)) {
        ++rep.captures;
        break;
      }
      if (inside) ++rep.uncaptured_entries;
      if (!guard_invariant(oracle, ga, r)) ++rep.invariant_violations;
      if (inside) break;

      std::vector<Vertex> options{r};
      for (Vertex w : d.out(r)) options.push_back(w);
      std::vector<Vertex> pool;
      if (coin(rng) < bias) {
        int best = oracle.distance(u, r);
        for (Vertex w : options) best = std::min(best, oracle.distance(u, w));
        for (Vertex w : options) {
          if (oracle.distance(u, w) == best) pool.push_back(w);
        }
      } else {
        pool = options;
      }
      r = pool[rng() % pool.size()];
      if (ga.captures(r)) {
        ++rep.captures;
        break;
      }
      if (oracle.distance(u, r) <= rho) {
        ++rep.entries;
        inside = true;
      }
    }
  }
  return rep;
}

GuardStrategy::GuardStrategy(const Graph& g, Vertex center, bool chaser)
    : g_(g), oracle_(g.as_digraph()), girth_(girth(g)), rho_(protected_radius(g)), chaser_(chaser) {
  if (!g.valid_vertex(center)) throw PreconditionError("guard center out of range");
  pair_ = GuardAssignment::at(center, rho_);
}

Multiset GuardStrategy::place(int k, std::uint64_t) {
  if (k < cops_needed()) {
    throw PreconditionError("girth-guard needs " + std::to_string(cops_needed()) + " cops, got " + std::to_string(k));
  }
  pair_ = GuardAssignment::at(pair_.u, rho_);
  spare_.assign(k - 2, pair_.u);
  active_ = false;
  flush_rounds_ = guard_rounds_ = 0;
  std::vector<Vertex> all{pair_.follower, pair_.anchor};
  all.insert(all.end(), spare_.begin(), spare_.end());
  return make_multiset(all);
}

Multiset GuardStrategy::move(const GameState& state) {
  const Vertex r = *state.robber;
  const Digraph& d = g_.as_digraph();
  std::vector<Vertex> all{pair_.follower, pair_.anchor};
  all.insert(all.end(), spare_.begin(), spare_.end());
  if (make_multiset(all) != state.cops) throw InvariantViolation("girth-guard lost track of its cops");

  if (!active_ && oracle_.distance(pair_.u, r) > 2 * rho_ - 2) active_ = true;
  if (active_) {
    ++guard_rounds_;
    pair_ = guard_move(oracle_, pair_, r);
    if (!pair_.captures(r) && !guard_invariant(oracle_, pair_, r)) {
      throw InvariantViolation("guard invariant broken with robber at " + std::to_string(r));
    }
  } else {
    ++flush_rounds_;
    if (step_ok(d, pair_.u, r)) pair_.follower = r;
  }
  const bool taken = pair_.captures(r);
  for (auto& c : spare_) {
    if (taken) break;
    c = step_ok(d, c, r) ? r : oracle_.next_step(c, r);
    if (c == r) break;
  }
  std::vector<Vertex> next{pair_.follower, pair_.anchor};
  next.insert(next.end(), spare_.begin(), spare_.end());
  return make_multiset(next);
}

Json GuardStrategy::diagnostics() const {
  Json stage;
  stage["stage"] = "girth-guard";
  stage["center"] = pair_.u;
  stage["girth"] = girth_ == kInfiniteGirth ? Json(nullptr) : Json(girth_);
  stage["rho"] = rho_;
  stage["flush_rounds"] = flush_rounds_;
  stage["guard_rounds"] = guard_rounds_;
  return Json::array({stage});
}

}  // namespace copsrobbers
