// Acceptance suite: one PASS/FAIL line per criterion, details on the lines
// that follow it. Exit status is the number of failed criteria (capped at 8).
//
// Reference values come from the brute-force oracles in oracles.hpp, which
// share no code with the library's algorithms.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "copsrobbers/bounds.hpp"
#include "copsrobbers/cover.hpp"
#include "copsrobbers/digraph_pursuit.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/guard.hpp"
#include "copsrobbers/matching.hpp"
#include "copsrobbers/robbers.hpp"
#include "copsrobbers/solver.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace {

using namespace copsrobbers;

// Pinned tolerances and sizes.
constexpr int kDigraphInstances = 240;        // criterion 1 asks for >= 200
constexpr int kDigraphMaxFailures = 0;
constexpr int kOracleCopNumberMaxN = 7;       // brute-force c(D) cross-check up to this order
constexpr int kTrees = 50;
constexpr int kGuardTrajectories = 10000;     // per graph, half adversarial
constexpr int kGuardLength = 60;
constexpr int kReachGraphs = 1000;
constexpr int kReachMaxVertices = 12;
constexpr int kCoverResamples = 50;
constexpr double kCoverMinPassRate = 0.8;
constexpr double kCoverInfoScale = 0.05;      // informational run below the asymptotic threshold
constexpr int kEscalationGames = 120;
constexpr int kSaturatedGraphs = 60;

struct Criterion {
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 12) notes.push_back("violation: " + why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double x, int prec = 3) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(prec);
  ss << x;
  return ss.str();
}

oracle::Matrix matrix_of(const Digraph& d) { return testing_helpers::matrix(d); }

// ---------------------------------------------------------------------------

void digraph_bound(Criterion& c) {
  int played = 0;
  int captured = 0;
  int solved = 0;
  int unsolved = 0;
  int oracle_checked = 0;
  int max_ratio_num = 0;
  std::map<int, int> by_n;
  for (int i = 0; i < kDigraphInstances; ++i) {
    RandomDigraphOptions opt;
    opt.n = 3 + i % 10;
    opt.arc_probability = 0.45 + 0.05 * (i % 7);
    const auto d = random_diam2_digraph(opt, 1000 + i);
    if (!is_strongly_connected(d) || directed_diameter(d).value_or(99) > 2) {
      c.fail("generator returned a digraph outside the class at instance " + std::to_string(i));
      continue;
    }
    const long long bound = isqrt(2LL * d.order());
    DigraphStrategy cops(d);
    const int k = cops.cops_needed();
    max_ratio_num = std::max(max_ratio_num, k);
    if (k > bound) c.fail("instance " + std::to_string(i) + ": plan uses " + std::to_string(k) + " > " + std::to_string(bound));
    OptimalRobber robber(d, k);
    auto t = play(d, cops, robber, k, default_max_rounds(d.order(), k), i);
    ++played;
    ++by_n[d.order()];
    if (t.outcome.kind == OutcomeKind::Captured) {
      ++captured;
    } else {
      c.fail("instance " + std::to_string(i) + " (n=" + std::to_string(d.order()) + "): " + to_string(t.outcome.kind) +
             " " + t.outcome.reason);
    }
    if (replay(d, t) != t.outcome) c.fail("replay disagrees on instance " + std::to_string(i));

    try {
      const int cn = cop_number(d);
      ++solved;
      if (cn > bound) c.fail("c(D) = " + std::to_string(cn) + " > floor(sqrt(2n)) at instance " + std::to_string(i));
      if (d.order() <= kOracleCopNumberMaxN) {
        ++oracle_checked;
        const auto a = matrix_of(d);
        const bool wins = oracle::cops_win(a, cn);
        const bool fewer = cn > 1 && oracle::cops_win(a, cn - 1);
        if (!wins || fewer) c.fail("solver cop number disagrees with the brute-force oracle at instance " + std::to_string(i));
      }
    } catch (const BudgetExceeded&) {
      ++unsolved;
    }
  }
  const int failures = played - captured;
  if (failures > kDigraphMaxFailures) c.pass = false;
  if (played < 200) c.fail("only " + std::to_string(played) + " instances played");
  c.note("instances " + std::to_string(played) + ", captured " + std::to_string(captured) + ", largest plan " +
         std::to_string(max_ratio_num) + " cops");
  c.note("exact c(D) solved on " + std::to_string(solved) + " (budget exceeded on " + std::to_string(unsolved) +
         "), brute-force cross-check on " + std::to_string(oracle_checked));
}

// ---------------------------------------------------------------------------

using Edges = std::uint32_t;  // upper-triangle bitmask, n <= 8

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Arc> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::uint64_t canonical(int n, std::uint64_t mask) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) a[u][v] = a[v][u] = mask >> bit & 1;
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t m = 0;
    int b = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++b) {
        if (a[p[u]][p[v]]) m |= 1ULL << b;
      }
    }
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Bitmask of (n+1)-vertex graph: old edges keep their pairs, new vertex n
// joined to `nbrs`.
std::uint64_t extend(int n, std::uint64_t mask, std::uint32_t nbrs) {
  std::uint64_t out = 0;
  int bit = 0;
  int nb = 0;
  for (int u = 0; u < n + 1; ++u) {
    for (int v = u + 1; v < n + 1; ++v, ++nb) {
      if (v < n) {
        if (mask >> bit & 1) out |= 1ULL << nb;
        ++bit;
      } else if (nbrs >> u & 1) {
        out |= 1ULL << nb;
      }
    }
  }
  return out;
}

void exact_solver(Criterion& c) {
  SolverOptions serial;
  serial.exec = Execution::Serial;
  int tree_ok = 0;
  for (int i = 0; i < kTrees; ++i) {
    const int n = 2 + i % 11;
    auto t = random_tree(n, 77 + i);
    const int cn = cop_number(t, serial);
    if (cn == 1) ++tree_ok; else c.fail("tree n=" + std::to_string(n) + " has cop number " + std::to_string(cn));
    if (n <= 8 && !oracle::cops_win(testing_helpers::matrix(t), 1)) c.fail("oracle: tree not cop-win");
  }
  for (int n = 4; n <= 10; ++n) {
    const int cn = cop_number(cycle_graph(n), serial);
    if (cn != 2) c.fail("C" + std::to_string(n) + " has cop number " + std::to_string(cn));
    if (n <= 7) {
      auto a = testing_helpers::matrix(cycle_graph(n));
      if (oracle::cops_win(a, 1) || !oracle::cops_win(a, 2)) c.fail("oracle disagrees on C" + std::to_string(n));
    }
  }
  if (cop_number(petersen_graph(), serial) != 3) c.fail("Petersen cop number != 3");

  // Every graph on <= 8 vertices up to isomorphism: classes on 6 vertices by
  // canonical labelling, 7 by extending those and re-canonicalising, 8 by
  // extending the 7-vertex classes (duplicates kept; each class appears).
  std::vector<std::set<std::uint64_t>> classes(8);
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (1ULL << bits); ++m) classes[n].insert(canonical(n, m));
  }
  for (std::uint64_t m : classes[6]) {
    for (std::uint32_t nb = 0; nb < 64; ++nb) classes[7].insert(canonical(7, extend(6, m, nb)));
  }
  long graphs = 0;
  long non_monotone = 0;
  long oracle_checks = 0;
  auto check = [&](int n, std::uint64_t m) {
    auto g = graph_from_mask(n, m);
    ++graphs;
    bool before = false;
    for (int k = 1; k <= 3; ++k) {
      const bool now = cop_win(g, k, serial);
      if (before && !now) {
        ++non_monotone;
        c.fail("cop_win not monotone on n=" + std::to_string(n) + " mask " + std::to_string(m));
      }
      before = now;
      if (n <= 5 && k <= 2) {
        ++oracle_checks;
        if (oracle::cops_win(testing_helpers::matrix(g), k) != now) c.fail("oracle disagrees on n=" + std::to_string(n));
      }
    }
  };
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t m : classes[n]) check(n, m);
  }
  for (std::uint64_t m : classes[7]) {
    for (std::uint32_t nb = 0; nb < 128; ++nb) check(8, extend(7, m, nb));
  }
  c.note("trees " + std::to_string(tree_ok) + "/" + std::to_string(kTrees) + " cop-win; cycles C4..C10 and Petersen checked");
  c.note("monotonicity over " + std::to_string(graphs) + " graphs covering all isomorphism classes with n <= 8 (" +
         std::to_string(classes[6].size()) + " on 6, " + std::to_string(classes[7].size()) + " on 7), " +
         std::to_string(oracle_checks) + " brute-force cross-checks");
}

// ---------------------------------------------------------------------------

void guard_protocol(Criterion& c) {
  struct Case {
    std::string name;
    Graph g;
    int rho;
  };
  std::vector<Case> cases{{"McGee", mcgee_graph(), 2}, {"Heawood", heawood_graph(), 1}};
  for (auto& gc : cases) {
    auto dist = oracle::distances(testing_helpers::matrix(gc.g));
    const int n = gc.g.order();
    if (protected_radius(gc.g) != gc.rho) c.fail(gc.name + ": protected radius");
    DistanceOracle o(gc.g.as_digraph());
    auto rng = make_rng(2024, static_cast<std::uint64_t>(n));
    long steps = 0;
    int entries = 0;
    int captures = 0;
    for (int t = 0; t < kGuardTrajectories; ++t) {
      const Vertex u = static_cast<Vertex>(t % n);
      const bool adversarial = t % 2 == 0;
      std::vector<Vertex> starts;
      for (Vertex v = 0; v < n; ++v) {
        if (dist[u][v] > 2 * gc.rho - 2) starts.push_back(v);
      }
      Vertex r = starts[rng() % starts.size()];
      auto ga = GuardAssignment::at(u, gc.rho);
      for (int s = 0; s < kGuardLength; ++s) {
        ++steps;
        try {
          ga = guard_move(o, ga, r);
        } catch (const Error& e) {
          c.fail(gc.name + ": guard_move threw: " + e.what());
          break;
        }
        if (ga.follower == r || ga.anchor == r) {
          ++captures;
          break;
        }
        // Positional invariant from the raw distance matrix: robber at
        // distance 2 rho - k (k >= 1) puts one cop at distance k on the way
        // to the robber and the other on u; farther out both sit on u.
        const int dr = dist[u][r];
        if (dr <= gc.rho) c.fail(gc.name + ": robber inside B(u, rho) after the cop move");
        const bool anchor_home = ga.anchor == u || ga.follower == u;
        const Vertex other = ga.anchor == u ? ga.follower : ga.anchor;
        if (!anchor_home) c.fail(gc.name + ": no cop on u");
        if (dr >= 2 * gc.rho) {
          if (other != u) c.fail(gc.name + ": follower away from u with the robber far");
        } else {
          const int k = 2 * gc.rho - dr;
          if (dist[u][other] != k || dist[other][r] != dr - k) c.fail(gc.name + ": follower off the u-robber geodesic");
        }
        // Robber: toward u (adversarial) or uniformly among stay/neighbours.
        std::vector<Vertex> options{r};
        for (Vertex w : gc.g.neighbors(r)) options.push_back(w);
        if (adversarial) {
          int best = kUnreachable;
          for (Vertex w : options) best = std::min(best, dist[u][w]);
          std::vector<Vertex> pool;
          for (Vertex w : options) {
            if (dist[u][w] == best) pool.push_back(w);
          }
          r = pool[rng() % pool.size()];
        } else {
          r = options[rng() % options.size()];
        }
        if (ga.follower == r || ga.anchor == r) {
          ++captures;
          break;
        }
        if (dist[u][r] <= gc.rho) ++entries;  // must be answered by capture next move
      }
    }
    c.note(gc.name + ": " + std::to_string(kGuardTrajectories) + " trajectories, " + std::to_string(steps) +
           " steps, " + std::to_string(entries) + " entries into B(u, rho) (each captured on the next move), " +
           std::to_string(captures) + " captures");
  }
}

// ---------------------------------------------------------------------------

void hall_machinery(Criterion& c) {
  auto rng = make_rng(99, 1);
  int violators = 0;
  for (int t = 0; t < kReachGraphs; ++t) {
    const int n = 2 + static_cast<int>(rng() % (kReachMaxVertices - 1));
    auto g = testing_helpers::gnp(n, 0.25 + 0.05 * (t % 5), 5000 + t);
    auto dist = oracle::distances(testing_helpers::matrix(g));
    DistanceOracle o(g.as_digraph());
    VertexSet left, right;
    for (Vertex v = 0; v < n; ++v) {
      const auto side = rng() % 3;
      if (side == 0) left.push_back(v);
      if (side == 1) right.push_back(v);
    }
    const int radius = static_cast<int>(rng() % 3);
    auto h = build_reach_graph(o, left, right, radius);
    std::vector<std::vector<int>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (dist[right[j]][left[i]] <= radius) adj[i].push_back(static_cast<int>(j));
      }
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      std::vector<int> want;
      for (int j : adj[i]) want.push_back(j);
      if (h.edges.adjacency[i] != want) c.fail("reach graph adjacency differs from the distance matrix");
    }
    auto m = max_matching(h);
    const int best = oracle::max_matching_size(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
    if (static_cast<int>(m.pairs.size()) != best) {
      c.fail("matching size " + std::to_string(m.pairs.size()) + " vs brute force " + std::to_string(best));
    }
    for (auto [l, r] : m.pairs) {
      if (dist[r][l] > radius) c.fail("matched pair farther than the radius");
    }
    if (m.violator) {
      ++violators;
      const auto& s = *m.violator;
      std::set<Vertex> nbrs;
      for (Vertex x : s) {
        for (Vertex y : right) {
          if (dist[y][x] <= radius) nbrs.insert(y);
        }
      }
      if (s.size() <= nbrs.size()) c.fail("violator with |S| <= |N(S)|");
      // left \ S covered, by partners outside N(S)
      std::map<Vertex, Vertex> mate(m.pairs.begin(), m.pairs.end());
      for (Vertex l : left) {
        if (set_contains(s, l)) continue;
        auto it = mate.find(l);
        if (it == mate.end()) c.fail("left vertex outside S left uncovered");
        else if (nbrs.count(it->second)) c.fail("left \\ S matched into N(S)");
      }
    } else if (m.pairs.size() != left.size()) {
      c.fail("no violator reported for an imperfect matching");
    }
  }
  c.note(std::to_string(kReachGraphs) + " reach graphs (<= " + std::to_string(kReachMaxVertices) + " vertices), " +
         std::to_string(violators) + " with a Hall violator");
}

// ---------------------------------------------------------------------------

struct ChainStats {
  int pinned = 0;
  int imaginary_perfect = 0;
  int links = 0;
};

void check_transcript(Criterion& c, const Graph& g, const Transcript& t, ChainStats& st) {
  const Json& stages = t.stages;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const Json& s = stages[i];
    if (s.value("pinned", false)) {
      ++st.pinned;
      const int deadline = s["round"].get<int>() + 2 * s["ell"].get<int>();
      if (t.outcome.kind != OutcomeKind::Captured || t.outcome.round > deadline) {
        c.fail("pinned at round " + s["round"].dump() + " with ell " + s["ell"].dump() + " but " +
               to_string(t.outcome.kind) + " at " + std::to_string(t.outcome.round));
      }
    } else if (s.value("left_perfect", false)) {
      ++st.imaginary_perfect;
    }
    if (s["kind"] != "stage" || s["violator"].is_null()) continue;
    auto base = s["base"].get<VertexSet>();
    auto viol = s["violator"].get<VertexSet>();
    auto dist = oracle::distances(testing_helpers::matrix(g));
    for (Vertex v : viol) {
      int best = oracle::kInf;
      for (Vertex b : base) best = std::min(best, dist[b][v]);
      if (best > s["radius"].get<int>()) c.fail("violator vertex outside B(base, radius)");
    }
    if (i + 1 < stages.size() && stages[i + 1]["kind"] == "stage" && stages[i + 1]["cycle"] == s["cycle"] &&
        stages[i + 1]["stage"].get<int>() == s["stage"].get<int>() + 1) {
      ++st.links;
      if (stages[i + 1]["base"] != s["violator"]) c.fail("next stage does not start from the violator");
      const int r0 = s["radius"].get<int>();
      const int r1 = stages[i + 1]["radius"].get<int>();
      if (r1 < r0) c.fail("stage radius shrank");
    }
  }
}

void escalation(Criterion& c) {
  ChainStats st;
  std::map<std::string, int> outcomes;
  for (int i = 0; i < kEscalationGames; ++i) {
    Graph g;
    CoverConfig cfg;
    cfg.seed = 300 + i;
    switch (i % 4) {
      case 0:
      case 1: {
        RandomGraphOptions o;
        o.n = 30 + (i % 5) * 10;
        o.max_diameter = 4;
        o.min_diameter = 3;
        g = random_graph_with_diameter(o, 300 + i);
        cfg.slack = 0.3 + 0.1 * (i % 3);
        break;
      }
      case 2: {
        RandomGraphOptions o;
        o.n = 14 + i % 6;
        o.max_diameter = 3;
        g = random_graph_with_diameter(o, 300 + i);
        cfg.cop_budget = 6 + i % 4;
        cfg.endgame = 1;
        break;
      }
      default:
        g = i % 8 == 3 ? mcgee_graph() : heawood_graph();
        cfg.cop_budget = 12;
        break;
    }
    std::unique_ptr<RobberStrategy> robber;
    std::unique_ptr<CoverStrategy> probe;
    try {
      probe = std::make_unique<CoverStrategy>(g, cfg);
    } catch (const StrategyFailure&) {
      ++outcomes["no plan within budget"];
      continue;
    }
    const int k = probe->saturated() ? g.order() : probe->cops_needed();
    if (k <= 4 && g.order() <= 20) {
      robber = std::make_unique<OptimalRobber>(g.as_digraph(), k);
    } else if (i % 2) {
      robber = std::make_unique<RandomRobber>(g.as_digraph(), i);
    } else {
      robber = std::make_unique<GreedyDistanceRobber>(g.as_digraph());
    }
    Transcript t;
    try {
      t = run_full_strategy(g, cfg, *robber, 500);
    } catch (const InvariantViolation& e) {
      c.fail(std::string("invariant violation: ") + e.what());
      continue;
    }
    ++outcomes[to_string(t.outcome.kind)];
    if (t.outcome.kind == OutcomeKind::IllegalMove) c.fail("illegal move: " + t.outcome.reason);
    check_transcript(c, g, t, st);
  }
  // (c) budget n against the exact robber.
  int saturated_captures = 0;
  for (int i = 0; i < kSaturatedGraphs; ++i) {
    RandomGraphOptions o;
    o.n = 1 + i % 20;
    o.max_diameter = o.n;
    auto g = random_graph_with_diameter(o, 900 + i);
    CoverConfig cfg;
    cfg.cop_budget = g.order();
    OptimalRobber robber(g.as_digraph(), g.order());
    auto t = run_full_strategy(g, cfg, robber, 10);
    if (t.outcome.kind == OutcomeKind::Captured) ++saturated_captures;
    else c.fail("budget n did not capture on n=" + std::to_string(g.order()));
  }
  std::string tally;
  for (const auto& [k, v] : outcomes) tally += " " + k + "=" + std::to_string(v);
  c.note("games:" + tally);
  c.note("pinned stages " + std::to_string(st.pinned) + " (all captured in time), chain links " +
         std::to_string(st.links) + ", left-perfect stages resting on imaginary cops " +
         std::to_string(st.imaginary_perfect) + " (not pinned; a realness failure there triggers densification)");
  c.note("budget n: " + std::to_string(saturated_captures) + "/" + std::to_string(kSaturatedGraphs) +
         " captured against the optimal robber (n <= 20)");
}

// ---------------------------------------------------------------------------

void cover_property(Criterion& c) {
  for (int n : {64, 128, 256}) {
    const double p = std::pow(static_cast<double>(n), -1.0 / 3.0);
    RandomGraphOptions o;
    o.n = n;
    o.max_diameter = 6;
    o.min_diameter = 3;
    auto g = random_graph_with_diameter(o, 4000 + n);
    DistanceOracle oracle(g.as_digraph());
    int passed = 0;
    int vacuous = 0;
    int info_passed = 0;
    int info_qualifying = 0;
    for (int s = 0; s < kCoverResamples; ++s) {
      auto cs = sample_cover_set(n, p, 7000 + 100 * n + s);
      auto rep = verify_cover_property(oracle, cs.vertices, p, 64, s);
      passed += rep.passed();
      vacuous += rep.vacuous();
      auto info = verify_cover_property(oracle, cs.vertices, p, 64, s, kCoverInfoScale);
      info_passed += info.passed();
      info_qualifying += info.qualifying;
    }
    const double rate = static_cast<double>(passed) / kCoverResamples;
    if (rate < kCoverMinPassRate) c.fail("n=" + std::to_string(n) + " pass rate " + fmt(rate));
    const double threshold = cover_threshold(n, p);
    c.note("n=" + std::to_string(n) + ", p=" + fmt(p) + ": pass rate " + fmt(rate) + " (" + std::to_string(vacuous) +
           "/" + std::to_string(kCoverResamples) + " vacuous: log^2 n / p = " + fmt(threshold, 1) + " > n, so no (A, i) qualifies)");
    c.note("  informational, threshold scaled by " + fmt(kCoverInfoScale, 2) + ": pass rate " +
           fmt(static_cast<double>(info_passed) / kCoverResamples) + " over " + std::to_string(info_qualifying) +
           " qualifying checks (not part of the criterion)");
  }
}

// ---------------------------------------------------------------------------

void bound_formulas(Criterion& c) {
  auto exponent = [](const std::string& name, BoundParams p) { return *evaluate(name, p).exponent; };
  BoundParams d4;
  d4.d = 4;
  if (!(exponent("thm7", d4) == Rational(3, 5))) c.fail("thm7 at d=4 is " + exponent("thm7", d4).str());
  if (!(exponent("thm5", d4) == Rational(3, 5))) c.fail("thm5 exponent");
  if (!(exponent("thm6", d4) == Rational(4, 7))) c.fail("thm6 exponent");
  BoundParams d3;
  d3.d = 3;
  if (!(exponent("cor2", d3) == Rational(2, 3))) c.fail("cor2 at d=3 is " + exponent("cor2", d3).str());
  if (!diameter4_conditions(Rational(2, 5), Rational(1, 5))) c.fail("conditions at alpha=2/5, gamma=1/5");
  // thm9 with rho = 1 against thm7 for every d <= 10^6 (d >= 2 so the log is positive).
  long compared = 0;
  for (std::int64_t d = 2; d <= 1000000; ++d) {
    BoundParams p;
    p.d = d;
    BoundParams q = p;
    q.rho = 1;
    if (!(exponent("thm9", q) == exponent("thm7", p))) {
      c.fail("thm9(rho=1) != thm7 at d=" + std::to_string(d));
      break;
    }
    // Independent closed form: 1 - 2 / (2 ceil(log2 d) + 1).
    int k = 0;
    while ((std::int64_t{1} << k) < d) ++k;
    if (!(exponent("thm7", p) == Rational(2 * k - 1, 2 * k + 1))) {
      c.fail("thm7 closed form at d=" + std::to_string(d));
      break;
    }
    ++compared;
  }
  c.note("thm9(rho=1) == thm7 == (2k-1)/(2k+1) for all " + std::to_string(compared) + " d in [2, 10^6]");
}

// ---------------------------------------------------------------------------

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(COPSROBBERS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void determinism(Criterion& c) {
  const std::vector<std::string> commands{
      "gen --gen random-diam:n=40,d=4 --seed 11 --count 5",
      "gen --gen random-diam2:n=9 --seed 11 --count 3",
      "solve --gen random-diam:n=8,d=3 --seed 11",
      "solve --gen random-diam2:n=7 --seed 11 --k 2",
      "play --strategy cover --gen random-diam:n=50,d=4 --seed 11 --slack 0.4 --robber random",
      "play --strategy digraph --gen random-diam2:n=8 --seed 7 --robber optimal",
      "play --strategy girth-guard --gen mcgee --seed 11 --robber greedy-distance --max-rounds 80",
      "play --strategy trivial --gen random-diam:n=20,d=5 --seed 11 --k 2 --robber random",
      "verify --seed 11",
      "bounds --thm 7 --d 4 --n 1000000 --json",
      "bench --gen random-diam:n=30,d=4 --gen random-diam2:n=8 --seed 11 --instances 4 --slack 0.4 --threads 4",
  };
  for (const auto& cmd : commands) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    if (a.code != 0) c.fail("exit " + std::to_string(a.code) + ": " + cmd);
    if (a.out.empty()) c.fail("no output: " + cmd);
    if (a.out != b.out || a.code != b.code) c.fail("outputs differ: " + cmd);
  }
  c.note(std::to_string(commands.size()) + " commands run twice each, all six subcommands covered");
}

}  // namespace

int main() {
  std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> all{
      {{1, "digraph bound: diameter-2 digraphs captured with <= floor(sqrt(2n)) cops"}, digraph_bound},
      {{2, "exact solver ground truth and monotonicity"}, exact_solver},
      {{3, "guard protocol on McGee and Heawood"}, guard_protocol},
      {{4, "Hall machinery on random reach graphs"}, hall_machinery},
      {{5, "escalation mechanics: pin-and-capture, violator chain, budget n"}, escalation},
      {{6, "cover-property statistical check"}, cover_property},
      {{7, "bound formulas in exact arithmetic"}, bound_formulas},
      {{8, "determinism of every subcommand"}, determinism},
  };
  int failed = 0;
  for (auto& [c, run] : all) {
    try {
      run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    failed += !c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed;
}
