#include "copsrobbers/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "copsrobbers/bounds.hpp"
#include "copsrobbers/cover.hpp"
#include "copsrobbers/digraph_pursuit.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/graph_io.hpp"
#include "copsrobbers/guard.hpp"
#include "copsrobbers/matching.hpp"
#include "copsrobbers/robbers.hpp"
#include "copsrobbers/solver.hpp"

namespace copsrobbers {

namespace {

constexpr std::size_t kMaxMessages = 8;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.violations;
    if (r_.messages.size() < kMaxMessages) r_.messages.push_back(what);
  }

 private:
  SuiteResult& r_;
};

Graph random_connected(int n, double p, std::uint64_t seed) {
  RandomGraphOptions o;
  o.n = n;
  o.max_diameter = n;
  o.edge_probability = p;
  return random_graph_with_diameter(o, seed);
}

// Distances by repeated relaxation, independent of the BFS code.
std::vector<std::vector<int>> relaxed_distances(const Graph& g) {
  const int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) x = x == inf ? kUnreachable : x;
  }
  return d;
}

void graph_distances(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 20 * effort; ++t) {
    auto g = random_connected(6 + t % 10, 0.3, seed + t);
    auto ref = relaxed_distances(g);
    DistanceOracle o(g.as_digraph());
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) rec.check(o.distance(u, v) == ref[u][v], "distance mismatch");
      for (int i = 0; i <= 3; ++i) {
        VertexSet want;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (ref[u][v] <= i) want.push_back(v);
        }
        rec.check(o.ball(std::vector<Vertex>{u}, i) == want, "ball mismatch");
      }
    }
  }
  rec.check(girth(petersen_graph()) == 5, "Petersen girth");
  rec.check(girth(heawood_graph()) == 6, "Heawood girth");
  rec.check(girth(mcgee_graph()) == 7, "McGee girth");
  for (int n = 3; n <= 12; ++n) rec.check(girth(cycle_graph(n)) == n, "cycle girth");
  rec.check(girth(random_tree(12, seed)) == kInfiniteGirth, "tree girth");
}

void graph_io(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 30 * effort; ++t) {
    auto g = random_connected(2 + t % 40, 0.2, seed + t);
    rec.check(parse_graph6(write_graph6(g)) == g, "graph6 round trip");
    rec.check(parse_dimacs(write_dimacs(g)) == g, "DIMACS round trip");
    rec.check(parse_digraph_arcs(write_digraph_arcs(g.as_digraph())) == g.as_digraph(), "arc list round trip");
  }
  rec.check(write_graph6(complete_graph(4)) == "C~", "K4 graph6 is C~");
}

void matching_hall(Recorder& rec, std::uint64_t seed, int effort) {
  auto rng = make_rng(seed, 0x4A11);
  for (int t = 0; t < 200 * effort; ++t) {
    const int left = 1 + static_cast<int>(rng() % 7);
    const int right = static_cast<int>(rng() % 6);
    ReachGraph h;
    for (int i = 0; i < left; ++i) h.left.push_back(i);
    for (int j = 0; j < right; ++j) h.right.push_back(left + j);
    h.edges.left = left;
    h.edges.right = right;
    h.edges.adjacency.resize(left);
    for (int i = 0; i < left; ++i) {
      for (int j = 0; j < right; ++j) {
        if (rng() % 3 == 0) h.edges.adjacency[i].push_back(j);
      }
    }
    auto m = max_matching(h);
    // Brute-force optimum over subsets of left vertices (Koenig: left - max deficiency).
    int deficiency = 0;
    for (std::uint32_t mask = 0; mask < (1u << left); ++mask) {
      std::uint32_t nbrs = 0;
      int size = 0;
      for (int i = 0; i < left; ++i) {
        if (!(mask >> i & 1)) continue;
        ++size;
        for (int j : h.edges.adjacency[i]) nbrs |= 1u << j;
      }
      deficiency = std::max(deficiency, size - __builtin_popcount(nbrs));
    }
    rec.check(static_cast<int>(m.pairs.size()) == left - deficiency, "matching is not maximum");
    if (m.violator) {
      rec.check(m.violator->size() > m.violator_neighbors.size(), "violator has |S| <= |N(S)|");
      for (const auto& [l, r] : m.pairs) {
        if (!set_contains(*m.violator, l)) rec.check(!set_contains(m.violator_neighbors, r), "left\\S uses N(S)");
      }
      for (Vertex u : m.unmatched_left) rec.check(set_contains(*m.violator, u), "unmatched vertex outside S");
    } else {
      rec.check(m.left_perfect(), "no violator but left side uncovered");
    }
  }
}

void game_replay(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 20 * effort; ++t) {
    auto g = random_connected(8 + t % 8, 0.3, seed + t);
    TrivialStrategy cops(g.as_digraph());
    RandomRobber robber(g.as_digraph(), seed + t);
    auto tr = play(g, cops, robber, 1 + t % 3, 60, seed + t);
    rec.check(replay(g.as_digraph(), tr) == tr.outcome, "replay disagrees with play");
    auto back = transcript_from_json(to_json(tr));
    rec.check(to_json(back) == to_json(tr), "transcript JSON round trip");
    Multiset prev = tr.placement_cops;
    for (const auto& r : tr.rounds) {
      rec.check(validate_move(prev, r.cops, g), "illegal cop move in transcript");
      prev = r.cops;
    }
  }
}

void solver_truth(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 10 * effort; ++t) {
    rec.check(cop_number(random_tree(2 + t % 11, seed + t)) == 1, "tree with cop number != 1");
  }
  for (int n = 4; n <= 10; ++n) rec.check(cop_number(cycle_graph(n)) == 2, "cycle with cop number != 2");
  rec.check(cop_number(petersen_graph()) == 3, "Petersen cop number != 3");
  for (int t = 0; t < 10 * effort; ++t) {
    auto g = random_connected(4 + t % 4, 0.35, seed + 100 + t);
    bool before = false;
    for (int k = 1; k <= 3; ++k) {
      const bool now = cop_win(g, k);
      rec.check(!before || now, "cop_win not monotone in k");
      before = now;
    }
  }
}

void cover_sets(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 50 * effort; ++t) {
    const int n = 20 + t;
    auto outer = sample_cover_set(n, 0.4, seed + t);
    auto inner = sample_nested(outer.vertices, 0.5, seed + t);
    rec.check(is_subset(inner.vertices, outer.vertices), "R not inside I");
    rec.check(static_cast<double>(outer.vertices.size()) <= 2 * n * 0.4, "|I| > 2np");
    rec.check(static_cast<double>(inner.vertices.size()) <= 2 * outer.vertices.size() * 0.5, "|R| > 2|I|p'");
  }
  auto g = petersen_graph();
  DistanceOracle o(g.as_digraph());
  VertexSet all(10);
  std::iota(all.begin(), all.end(), 0);
  rec.check(verify_cover_property(o, all, 0.5, 8, seed, 0.1).passed(), "C = V failed the cover check");
  rec.check(!verify_cover_property(o, {}, 0.5, 8, seed, 0.1).passed(), "C = {} passed a qualifying check");
}

void guard_protocol(Recorder& rec, SuiteResult& out, std::uint64_t seed, int effort) {
  struct Case {
    const char* name;
    Graph g;
    int rho;
  };
  Case cases[] = {{"mcgee", mcgee_graph(), 2}, {"heawood", heawood_graph(), 1}};
  for (auto& c : cases) {
    rec.check(protected_radius(c.g) == c.rho, std::string(c.name) + " protected radius");
    DistanceOracle o(c.g.as_digraph());
    Json row = Json::object();
    for (double bias : {0.0, 0.9}) {
      auto rep = run_guard_trials(o, 0, c.rho, 500 * effort, 40, bias, seed);
      rec.check(rep.uncaptured_entries == 0, std::string(c.name) + ": robber entered B(u, rho) uncaptured");
      rec.check(rep.invariant_violations == 0, std::string(c.name) + ": positional invariant broken");
      row[bias > 0 ? "adversarial" : "random"] = {{"trials", rep.trials},
                                                  {"entries", rep.entries},
                                                  {"captures", rep.captures},
                                                  {"uncaptured_entries", rep.uncaptured_entries},
                                                  {"invariant_violations", rep.invariant_violations}};
    }
    out.details[c.name] = row;
  }
}

// Pinned stages end in capture within 2 ell rounds; consecutive stages chain
// through the violator, which lies in B(base, radius).
void check_transcript(Recorder& rec, const Graph& g, const Transcript& t) {
  const Json& st = t.stages;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const Json& s = st[i];
    if (s.value("pinned", false)) {
      const int deadline = s["round"].get<int>() + 2 * s["ell"].get<int>();
      rec.check(t.outcome.kind == OutcomeKind::Captured && t.outcome.round <= deadline,
                "pinned stage at round " + std::to_string(s["round"].get<int>()) + " not captured by " +
                    std::to_string(deadline));
    }
    if (s["kind"] != "stage" || s["violator"].is_null()) continue;
    auto base = s["base"].get<VertexSet>();
    auto violator = s["violator"].get<VertexSet>();
    auto dist = bfs_distances(g.as_digraph(), base);
    bool inside = true;
    for (Vertex v : violator) inside = inside && dist[v] <= s["radius"].get<int>();
    rec.check(inside, "violator outside B(base, radius)");
    if (i + 1 < st.size() && st[i + 1]["kind"] == "stage" && st[i + 1]["cycle"] == s["cycle"] &&
        st[i + 1]["stage"].get<int>() == s["stage"].get<int>() + 1) {
      rec.check(st[i + 1]["base"] == s["violator"], "next stage does not start from the violator");
    }
  }
}

void escalation(Recorder& rec, SuiteResult& out, std::uint64_t seed, int effort) {
  int games = 0;
  int captured = 0;
  int failures = 0;
  for (int t = 0; t < 10 * effort; ++t) {
    RandomGraphOptions opt;
    opt.n = 30 + 2 * t;
    opt.max_diameter = 4;
    opt.min_diameter = 3;
    auto g = random_graph_with_diameter(opt, seed + t);
    CoverConfig cfg;
    cfg.seed = seed + t;
    cfg.slack = 0.4;
    GreedyDistanceRobber robber(g.as_digraph());
    auto tr = run_full_strategy(g, cfg, robber, 400);
    ++games;
    captured += tr.outcome.kind == OutcomeKind::Captured;
    failures += tr.outcome.kind == OutcomeKind::StrategyError;
    rec.check(tr.outcome.kind != OutcomeKind::IllegalMove, "illegal move by the cover strategy");
    check_transcript(rec, g, tr);
  }
  for (int t = 0; t < 5 * effort; ++t) {
    auto g = random_connected(6 + t % 10, 0.3, seed + 50 + t);
    CoverConfig cfg;
    cfg.cop_budget = g.order();
    OptimalRobber robber(g.as_digraph(), g.order());
    auto tr = run_full_strategy(g, cfg, robber, 10);
    rec.check(tr.outcome.kind == OutcomeKind::Captured, "budget n did not capture");
  }
  out.details = {{"games", games}, {"captured", captured}, {"team_exhausted", failures}};
}

void digraph_bound(Recorder& rec, std::uint64_t seed, int effort) {
  for (int t = 0; t < 20 * effort; ++t) {
    RandomDigraphOptions opt;
    opt.n = 3 + t % 6;
    opt.arc_probability = 0.55;
    auto d = random_diam2_digraph(opt, seed + t);
    DigraphStrategy cops(d);
    const int k = cops.cops_needed();
    rec.check(k <= isqrt(2LL * d.order()), "digraph strategy needs more than floor(sqrt(2n)) cops");
    OptimalRobber robber(d, k);
    auto tr = play(d, cops, robber, k, default_max_rounds(d.order(), k), seed + t);
    rec.check(tr.outcome.kind == OutcomeKind::Captured, "digraph strategy failed: " + tr.outcome.reason);
  }
}

void bound_formulas(Recorder& rec, std::uint64_t, int) {
  auto exponent = [](const std::string& name, BoundParams p) { return *evaluate(name, p).exponent; };
  BoundParams d4;
  d4.d = 4;
  d4.n = 1000000;
  rec.check(exponent("thm7", d4) == Rational(3, 5), "thm7 at d = 4");
  rec.check(exponent("thm7", d4) == exponent("thm5", d4), "thm7 at d = 4 differs from thm5");
  rec.check(exponent("thm6", d4) == Rational(4, 7), "thm6 exponent");
  BoundParams d3;
  d3.d = 3;
  rec.check(exponent("cor2", d3) == Rational(2, 3), "cor2 at d = 3");
  rec.check(diameter4_conditions(Rational(2, 5), Rational(1, 5)), "alpha = 2/5, gamma = 1/5 conditions");
  rec.check(gamma_schedule(Rational(2, 5), 1) == Rational(1, 10), "gamma_1");
  rec.check(gamma_schedule(Rational(2, 5), 2) == Rational(3, 20), "gamma_2");
  for (std::int64_t d = 1; d <= 1000000; d = d < 64 ? d + 1 : d * 3 / 2) {
    if (ceil_log2(d) < 1) continue;
    BoundParams p;
    p.d = d;
    BoundParams q = p;
    q.rho = 1;
    rec.check(exponent("thm9", q) == exponent("thm7", p), "thm9 at rho = 1 differs from thm7, d = " + std::to_string(d));
  }
  BoundParams n100;
  n100.n = 100;
  rec.check(evaluate("thm11", n100).count == 14, "thm11 at n = 100");
}

using Runner = std::function<void(Recorder&, SuiteResult&, std::uint64_t, int)>;

const std::map<std::string, Runner>& registry() {
  auto plain = [](void (*f)(Recorder&, std::uint64_t, int)) {
    return Runner([f](Recorder& r, SuiteResult&, std::uint64_t s, int e) { f(r, s, e); });
  };
  static const std::map<std::string, Runner> suites{
      {"graph_core.distances", plain(graph_distances)},
      {"graph_core.io", plain(graph_io)},
      {"matching_hall.hall", plain(matching_hall)},
      {"game_engine.replay", plain(game_replay)},
      {"exact_solver.ground_truth", plain(solver_truth)},
      {"cover_strategy.cover_sets", plain(cover_sets)},
      {"cover_strategy.guard", guard_protocol},
      {"cover_strategy.escalation", escalation},
      {"digraph_pursuit.bound", plain(digraph_bound)},
      {"bounds.formulas", plain(bound_formulas)},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, run] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int effort) {
  auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
  if (effort < 1) throw PreconditionError("effort must be >= 1");
  SuiteResult r;
  r.name = name;
  Recorder rec(r);
  it->second(rec, r, seed, effort);
  return r;
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["passed"] = r.passed();
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["messages"] = r.messages;
  j["details"] = r.details;
  return j;
}

}  // namespace copsrobbers
