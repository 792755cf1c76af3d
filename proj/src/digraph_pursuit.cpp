#include "copsrobbers/digraph_pursuit.hpp"

#include <algorithm>
#include <cmath>

namespace copsrobbers {

long long isqrt(long long x) {
  if (x < 0) throw PreconditionError("isqrt of a negative value");
  auto s = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

Decomposition decompose(const Digraph& d) {
  const int n = d.order();
  std::vector<std::uint8_t> alive(n, 1);
  int m = n;
  Decomposition dec;
  auto residual_degree = [&](Vertex v) {
    int deg = 0;
    for (Vertex w : d.out(v)) deg += alive[w];
    return deg;
  };
  while (m > 0) {
    const int threshold = static_cast<int>(isqrt(2LL * m));
    Vertex best = -1;
    int best_degree = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = residual_degree(v);
      if (deg > best_degree) {
        best_degree = deg;
        best = v;
      }
    }
    if (best_degree < threshold) break;
    dec.steps.push_back({best, m, threshold, best_degree});
    dec.centers.push_back(best);
    alive[best] = 0;
    --m;
    for (Vertex w : d.out(best)) {
      if (alive[w]) {
        alive[w] = 0;
        --m;
      }
    }
  }
  dec.centers = make_vertex_set(dec.centers);
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) dec.residual_vertices.push_back(v);
  }
  dec.residual = induced(d, dec.residual_vertices);
  for (Vertex v : dec.residual_vertices) dec.residual_max_out_degree = std::max(dec.residual_max_out_degree, residual_degree(v));
  // One cop handles a residual of at most two vertices (placed on a vertex
  // with an arc into the other one, if there is such an arc).
  const auto h = dec.residual_vertices.size();
  dec.squad = h == 0 ? 0 : h <= 2 ? 1 : dec.residual_max_out_degree + 1;
  if (dec.cops() > isqrt(2LL * n)) {
    throw InvariantViolation("decomposition uses " + std::to_string(dec.cops()) + " cops, more than floor(sqrt(2n)) = " +
                             std::to_string(isqrt(2LL * n)));
  }
  return dec;
}

PursuitMode pursuit_mode(const Digraph& d) {
  auto diam = directed_diameter(d);
  if (!diam) throw PreconditionError("digraph strategy needs a strongly connected digraph");
  if (*diam <= 2) return PursuitMode::Diameter2;
  if (*diam <= 3 && bipartition(d)) return PursuitMode::BipartiteDiameter3;
  throw PreconditionError("digraph strategy needs diameter <= 2, or a bipartite digraph of diameter <= 3 (diameter is " +
                          std::to_string(*diam) + ")");
}

namespace {

bool guards(const Digraph& d, Vertex cop, Vertex target) { return cop == target || d.has_arc(cop, target); }

}  // namespace

std::vector<Vertex> endgame_moves(const DistanceOracle& oracle, const Decomposition& dec, PursuitMode mode,
                                  const std::vector<std::uint8_t>& side, std::span<const Vertex> squad, Vertex r) {
  const Digraph& d = oracle.digraph();
  std::vector<Vertex> next(squad.begin(), squad.end());
  for (std::size_t i = 0; i < squad.size(); ++i) {
    if (squad[i] == r || d.has_arc(squad[i], r)) {
      next[i] = r;
      return next;
    }
  }
  if (squad.empty()) return next;

  VertexSet targets;
  if (!dec.residual.member.empty() && dec.residual.member[r]) {
    for (Vertex v : d.out(r)) {
      if (dec.residual.member[v]) targets.push_back(v);
    }
  }
  const std::size_t guard_count = std::min(targets.size(), squad.size() - 1);
  const bool wait_on_side_one = mode == PursuitMode::BipartiteDiameter3 && side[r] == 1;

  for (std::size_t i = 0; i < squad.size(); ++i) {
    const Vertex c = squad[i];
    if (i >= guard_count) {
      next[i] = oracle.next_step(c, r);
      continue;
    }
    if (wait_on_side_one) {
      // Robber on side 1: guards gather on side 1 and wait.
      if (side[c] != 1) {
        auto out = d.out(c);
        auto it = std::find_if(out.begin(), out.end(), [&](Vertex w) { return side[w] == 1; });
        if (it == out.end()) throw PreconditionError("guard has no arc into the waiting side");
        next[i] = *it;
      }
      continue;
    }
    const Vertex target = targets[i];
    if (guards(d, c, target)) continue;  // hold
    auto out = d.out(c);
    auto it = std::find_if(out.begin(), out.end(), [&](Vertex w) { return guards(d, w, target); });
    if (it == out.end()) {
      throw PreconditionError("guard at " + std::to_string(c) + " cannot reach an in-neighbour of " +
                              std::to_string(target) + " in one move");
    }
    next[i] = *it;
  }
  return next;
}

DigraphStrategy::DigraphStrategy(const Digraph& d)
    : d_(d), oracle_(d), mode_(pursuit_mode(d)), decomposition_(decompose(d)) {
  if (auto s = bipartition(d)) side_ = std::move(*s);
}

Multiset DigraphStrategy::place(int k, std::uint64_t) {
  if (k < cops_needed()) {
    throw PreconditionError("digraph strategy needs " + std::to_string(cops_needed()) + " cops, got " + std::to_string(k));
  }
  stationary_ = decomposition_.centers;
  const auto& h = decomposition_.residual_vertices;
  Vertex home = h.empty() ? 0 : h.front();
  if (h.size() == 2 && !d_.has_arc(h[0], h[1]) && d_.has_arc(h[1], h[0])) {
    home = h[1];
  } else if (h.size() > 2 && mode_ == PursuitMode::BipartiteDiameter3 && side_[home] != 1) {
    for (Vertex v = 0; v < d_.order(); ++v) {
      if (side_[v] == 1) {
        home = v;
        break;
      }
    }
  }
  // Spare cops beyond the budget join the squad as extra chasers.
  squad_.assign(k - static_cast<int>(stationary_.size()), home);
  pinned_rounds_ = 0;
  std::vector<Vertex> all = stationary_;
  all.insert(all.end(), squad_.begin(), squad_.end());
  return make_multiset(all);
}

Multiset DigraphStrategy::move(const GameState& state) {
  const Vertex r = *state.robber;
  std::vector<Vertex> current = stationary_;
  current.insert(current.end(), squad_.begin(), squad_.end());
  if (make_multiset(current) != state.cops) throw InvariantViolation("digraph strategy lost track of its cops");

  // A stationary cop whose out-neighbourhood the robber entered takes it.
  for (std::size_t i = 0; i < stationary_.size(); ++i) {
    if (d_.has_arc(stationary_[i], r)) {
      std::vector<Vertex> next = stationary_;
      next[i] = r;
      next.insert(next.end(), squad_.begin(), squad_.end());
      stationary_[i] = r;
      return make_multiset(next);
    }
  }
  auto next_squad = endgame_moves(oracle_, decomposition_, mode_, side_, squad_, r);
  if (next_squad == squad_) ++pinned_rounds_;
  squad_ = std::move(next_squad);
  std::vector<Vertex> next = stationary_;
  next.insert(next.end(), squad_.begin(), squad_.end());
  return make_multiset(next);
}

Json DigraphStrategy::diagnostics() const {
  Json stage;
  stage["stage"] = "decomposition";
  stage["mode"] = mode_ == PursuitMode::Diameter2 ? "diameter2" : "bipartite-diameter3";
  stage["centers"] = decomposition_.centers;
  Json steps = Json::array();
  for (const auto& s : decomposition_.steps) {
    steps.push_back({{"center", s.center}, {"m", s.residual_order}, {"threshold", s.threshold}, {"out_degree", s.out_degree}});
  }
  stage["steps"] = steps;
  stage["residual_order"] = decomposition_.residual_vertices.size();
  stage["residual_max_out_degree"] = decomposition_.residual_max_out_degree;
  stage["squad"] = decomposition_.squad;
  stage["cops"] = decomposition_.cops();
  stage["budget"] = isqrt(2LL * d_.order());
  return Json::array({stage});
}

}  // namespace copsrobbers
