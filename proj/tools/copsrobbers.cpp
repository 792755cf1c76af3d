// Command-line front end: gen, solve, play, verify, bounds, bench.
//
// Exit codes: 0 success, 1 invariant violation (or a failed verify suite),
// 2 usage or input error, 3 resource budget exceeded.

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "copsrobbers/bounds.hpp"
#include "copsrobbers/cover.hpp"
#include "copsrobbers/digraph_pursuit.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/graph_io.hpp"
#include "copsrobbers/guard.hpp"
#include "copsrobbers/robbers.hpp"
#include "copsrobbers/solver.hpp"
#include "copsrobbers/verify.hpp"

namespace {

using namespace copsrobbers;

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Source {
  std::string graph6;
  std::string input;
  std::string format;  // graph6, dimacs, arcs; empty: from the file extension
  std::string gen;
  bool lenient = false;

  void attach(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "Graph in graph6 text");
    auto* in = cmd->add_option("--input", input, "Graph file")->check(CLI::ExistingFile);
    auto* gen_opt = cmd->add_option("--gen", gen, "Generator spec, e.g. random-diam:n=30,d=4");
    g6->excludes(in)->excludes(gen_opt);
    in->excludes(gen_opt);
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"graph6", "dimacs", "arcs"}));
    cmd->add_flag("--lenient", lenient, "Skip malformed records instead of failing");
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_for(const std::string& path) {
  auto ends = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".dimacs") || ends(".col")) return "dimacs";
  if (ends(".arcs")) return "arcs";
  return "graph6";
}

AnyGraph load(const Source& s, std::optional<std::uint64_t> seed) {
  std::vector<std::string> warnings;
  ParseOptions opt{!s.lenient, &warnings};
  AnyGraph out;
  if (!s.gen.empty()) {
    if (!seed) throw PreconditionError("--gen needs --seed");
    out = generate(parse_generator_spec(s.gen), *seed);
  } else if (!s.graph6.empty()) {
    out = parse_graph6(s.graph6, opt);
  } else if (!s.input.empty()) {
    const std::string text = read_file(s.input);
    const std::string fmt = s.format.empty() ? format_for(s.input) : s.format;
    if (fmt == "dimacs") {
      out = parse_dimacs(text, opt);
    } else if (fmt == "arcs") {
      out = parse_digraph_arcs(text, opt);
    } else {
      out = parse_graph6(text, opt);
    }
  } else {
    throw PreconditionError("give one of --graph6, --input or --gen");
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return out;
}

const Digraph& board_of(const AnyGraph& g) {
  return std::holds_alternative<Graph>(g) ? std::get<Graph>(g).as_digraph() : std::get<Digraph>(g);
}

// Undirected view for strategies that need one; symmetric digraphs qualify.
Graph undirected(const AnyGraph& g, const std::string& who) {
  if (std::holds_alternative<Graph>(g)) return std::get<Graph>(g);
  const auto& d = std::get<Digraph>(g);
  if (!d.is_symmetric()) throw PreconditionError(who + " needs an undirected graph");
  return to_graph(d);
}

std::string encode(const AnyGraph& g) {
  if (std::holds_alternative<Graph>(g)) return write_graph6(std::get<Graph>(g));
  return write_digraph_arcs(std::get<Digraph>(g));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// Strategies shared by play and bench

struct StrategyOptions {
  std::string strategy = "cover";
  std::string robber = "greedy-distance";
  std::optional<int> k;
  double alpha = 0.4;
  double slack = 1;
  std::optional<int> budget;
  int rho = 0;
  int densify = 1;
  std::string endgame = "auto";
  int center = 0;
  std::optional<int> max_rounds;
  std::optional<std::uint64_t> state_budget;

  void attach(CLI::App* cmd) {
    cmd->add_option("--strategy", strategy, "Cop strategy")
        ->check(CLI::IsMember({"cover", "girth-guard", "digraph", "trivial"}));
    cmd->add_option("--robber", robber, "Robber strategy")->check(CLI::IsMember({"optimal", "random", "greedy-distance"}));
    cmd->add_option("--k", k, "Number of cops (default: what the strategy plans)")->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", alpha, "Cover density exponent, in (0, 1)");
    cmd->add_option("--slack", slack, "Multiplier on every sampling density")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "Cop budget for the cover strategy (>= n: one cop per vertex)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rho", rho, "Protected radius override (0: from the girth)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--densify", densify, "Densification cycles")->check(CLI::NonNegativeNumber);
    cmd->add_option("--endgame", endgame, "Diameter-3 endgame")->check(CLI::IsMember({"auto", "on", "off"}));
    cmd->add_option("--center", center, "Guarded vertex for girth-guard")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-rounds", max_rounds, "Round limit")->check(CLI::PositiveNumber);
    cmd->add_option("--state-budget", state_budget, "Solver state budget for the optimal robber")
        ->check(CLI::PositiveNumber);
  }
};

struct Match {
  std::unique_ptr<CopStrategy> cops;
  std::unique_ptr<RobberStrategy> robber;
  int k = 0;
};

// `holder` keeps the undirected view alive for strategies that reference it.
Match build_match(const AnyGraph& g, Graph& holder, const StrategyOptions& o, std::uint64_t seed) {
  const Digraph& board = board_of(g);
  Match m;
  if (o.strategy == "cover") {
    holder = undirected(g, "cover");
    CoverConfig cfg;
    cfg.alpha = o.alpha;
    cfg.slack = o.slack;
    cfg.rho = o.rho;
    cfg.densify_cycles = o.densify;
    cfg.endgame = o.endgame == "auto" ? -1 : o.endgame == "on" ? 1 : 0;
    cfg.seed = seed;
    cfg.cop_budget = o.budget;
    auto cs = std::make_unique<CoverStrategy>(holder, cfg);
    m.k = cs->saturated() ? std::max(holder.order(), o.budget.value_or(0)) : cs->cops_needed();
    m.cops = std::move(cs);
  } else if (o.strategy == "girth-guard") {
    holder = undirected(g, "girth-guard");
    auto gs = std::make_unique<GuardStrategy>(holder, o.center);
    m.k = gs->cops_needed();
    m.cops = std::move(gs);
  } else if (o.strategy == "digraph") {
    auto ds = std::make_unique<DigraphStrategy>(board);
    m.k = ds->cops_needed();
    m.cops = std::move(ds);
  } else {
    m.cops = std::make_unique<TrivialStrategy>(board);
    m.k = 1;
  }
  if (o.k) {
    if (o.strategy == "cover" && *o.k != m.k) {
      throw PreconditionError("the cover strategy plans " + std::to_string(m.k) + " cops; use --budget to cap it");
    }
    m.k = *o.k;
  }
  if (o.robber == "optimal") {
    SolverOptions so;
    if (o.state_budget) so.state_budget = *o.state_budget;
    m.robber = std::make_unique<OptimalRobber>(board, m.k, so);
  } else if (o.robber == "random") {
    m.robber = std::make_unique<RandomRobber>(board, seed);
  } else {
    m.robber = std::make_unique<GreedyDistanceRobber>(board);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_gen(const std::string& spec, std::uint64_t seed, int count, const std::string& format, const std::string& out) {
  std::string text;
  for (int i = 0; i < count; ++i) {
    auto g = generate(parse_generator_spec(spec), seed + static_cast<std::uint64_t>(i));
    if (std::holds_alternative<Digraph>(g)) {
      if (!format.empty() && format != "arcs") throw PreconditionError("digraphs are written as arc lists");
      text += write_digraph_arcs(std::get<Digraph>(g));
    } else if (format == "dimacs") {
      text += write_dimacs(std::get<Graph>(g));
    } else if (format == "arcs") {
      text += write_digraph_arcs(std::get<Graph>(g).as_digraph());
    } else {
      text += write_graph6(std::get<Graph>(g)) + "\n";
    }
  }
  emit(out, text);
  return 0;
}

int cmd_solve(const Source& src, std::optional<std::uint64_t> seed, std::optional<int> k,
              std::optional<std::uint64_t> budget, bool timing, const std::string& out) {
  auto g = load(src, seed);
  SolverOptions so;
  if (budget) so.state_budget = *budget;
  Json j;
  j["graph"] = encode(g);
  if (k) {
    auto r = solve_cop_win(board_of(g), *k, so);
    j.update(to_json(r, timing));
  } else {
    auto r = solve_cop_number(board_of(g), so);
    j.update(to_json(r, timing));
    j["cop_number"] = r.k;
  }
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_play(const Source& src, std::uint64_t seed, const StrategyOptions& o, const std::string& out) {
  auto g = load(src, seed);
  Graph holder;
  auto m = build_match(g, holder, o, seed);
  const Digraph& board = board_of(g);
  const int rounds = o.max_rounds.value_or(default_max_rounds(board.order(), m.k));
  auto t = play(board, *m.cops, *m.robber, m.k, rounds, seed);
  emit(out, to_json(t).dump(2) + "\n");
  std::cerr << to_string(t.outcome.kind) << " at round " << t.outcome.round << " with " << m.k << " cops"
            << (t.outcome.reason.empty() ? "" : ": " + t.outcome.reason) << "\n";
  return 0;
}

int cmd_verify(std::vector<std::string> suites, std::uint64_t seed, int effort, bool list, const std::string& out) {
  if (list) {
    for (const auto& s : suite_names()) std::cout << s << "\n";
    return 0;
  }
  if (suites.empty()) suites = suite_names();
  Json j;
  j["seed"] = seed;
  j["effort"] = effort;
  j["suites"] = Json::array();
  bool ok = true;
  for (const auto& name : suites) {
    auto r = run_suite(name, seed, effort);
    ok = ok && r.passed();
    std::cerr << (r.passed() ? "ok   " : "FAIL ") << name << " (" << r.checks << " checks, " << r.violations
              << " violations)\n";
    j["suites"].push_back(to_json(r));
  }
  j["passed"] = ok;
  emit(out, j.dump(2) + "\n");
  return ok ? 0 : kExitInvariant;
}

int cmd_bounds(std::string thm, const BoundParams& p, bool json) {
  if (!thm.empty() && std::isdigit(static_cast<unsigned char>(thm[0]))) thm = "thm" + thm;
  auto r = evaluate(thm, p);
  std::cout << (json ? to_json(r).dump(2) : to_text(r)) << "\n";
  return 0;
}

struct BenchRow {
  std::string spec;
  std::uint64_t seed = 0;
  std::string n, d, g, cops, captured, rounds, outcome;
  int code = 0;
};

int cmd_bench(const std::vector<std::string>& specs, std::uint64_t seed, int instances, const StrategyOptions& base,
              bool strategy_set, const std::string& out) {
  std::vector<BenchRow> rows;
  for (const auto& s : specs) {
    parse_generator_spec(s);  // fail fast on a bad spec
    for (int i = 0; i < instances; ++i) {
      BenchRow row;
      row.spec = s;
      row.seed = seed + static_cast<std::uint64_t>(i);
      rows.push_back(std::move(row));
    }
  }
  // Rows are filled in place, so the output order is the input order.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BenchRow& row = rows[i];
    try {
      auto g = generate(parse_generator_spec(row.spec), row.seed);
      StrategyOptions o = base;
      if (!strategy_set) o.strategy = std::holds_alternative<Digraph>(g) ? "digraph" : "cover";
      const Digraph& board = board_of(g);
      row.n = std::to_string(board.order());
      if (std::holds_alternative<Graph>(g)) {
        const auto& und = std::get<Graph>(g);
        if (is_connected(und)) row.d = std::to_string(diameter(und, Execution::Serial));
        const int gi = girth(und, Execution::Serial);
        row.g = gi == kInfiniteGirth ? "inf" : std::to_string(gi);
      } else if (auto dd = directed_diameter(board, Execution::Serial)) {
        row.d = std::to_string(*dd);
      }
      Graph holder;
      auto m = build_match(g, holder, o, row.seed);
      row.cops = std::to_string(m.k);
      auto t = play(board, *m.cops, *m.robber, m.k, o.max_rounds.value_or(default_max_rounds(board.order(), m.k)),
                    row.seed);
      row.captured = t.outcome.kind == OutcomeKind::Captured ? "1" : "0";
      row.rounds = std::to_string(t.outcome.round);
      row.outcome = to_string(t.outcome.kind);
    } catch (const InvariantViolation&) {
      row.outcome = "invariant_violation";
      row.code = kExitInvariant;
    } catch (const BudgetExceeded&) {
      row.outcome = "budget_exceeded";
      row.code = kExitBudget;
    } catch (const Error&) {
      row.outcome = "error";
      row.code = kExitUsage;
    }
  }
  std::string csv = "gen,seed,n,d,g,cops_used,captured,rounds,outcome\n";
  int code = 0;
  for (const auto& r : rows) {
    csv += "\"" + r.spec + "\"," + std::to_string(r.seed) + "," + r.n + "," + r.d + "," + r.g + "," + r.cops + "," +
           r.captured + "," + r.rounds + "," + r.outcome + "\n";
    if (r.code == kExitInvariant || (r.code && !code)) code = r.code;
  }
  emit(out, csv);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers: exact solving, strategy simulation and bounds"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out;

  auto* gen = app.add_subcommand("gen", "Write generated graphs");
  std::string gen_spec;
  std::string gen_format;
  int gen_count = 1;
  std::uint64_t gen_seed = 0;
  gen->add_option("--gen,spec", gen_spec, "Generator spec")->required();
  gen->add_option("--seed", gen_seed, "Seed (instance i uses seed + i)")->required();
  gen->add_option("--count", gen_count, "Number of graphs")->check(CLI::PositiveNumber);
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"graph6", "dimacs", "arcs"}));
  gen->add_option("--out", out, "Output path (default stdout)");

  auto* solve = app.add_subcommand("solve", "Exact cop number or k-cop win");
  Source solve_src;
  solve_src.attach(solve);
  std::optional<int> solve_k;
  std::optional<std::uint64_t> solve_budget;
  bool timing = false;
  solve->add_option("--seed", seed, "Seed for --gen");
  solve->add_option("--k", solve_k, "Decide k-cop win instead of the cop number")->check(CLI::PositiveNumber);
  solve->add_option("--budget", solve_budget, "State budget")->check(CLI::PositiveNumber);
  solve->add_flag("--timing", timing, "Report elapsed_ms (output is then not reproducible)");
  solve->add_option("--out", out, "Output path (default stdout)");

  auto* play_cmd = app.add_subcommand("play", "Play a strategy against a robber and write the transcript");
  Source play_src;
  play_src.attach(play_cmd);
  StrategyOptions play_opts;
  play_opts.attach(play_cmd);
  std::uint64_t play_seed = 0;
  play_cmd->add_option("--seed", play_seed, "Seed")->required();
  play_cmd->add_option("--out", out, "Transcript path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> suites;
  std::uint64_t verify_seed = 0;
  int effort = 1;
  bool list = false;
  verify->add_option("--suite", suites, "Suite name (repeatable; default all)");
  verify->add_option("--seed", verify_seed, "Seed")->required();
  verify->add_option("--effort", effort, "Instance-count multiplier")->check(CLI::PositiveNumber);
  verify->add_flag("--list", list, "List suite names");
  verify->add_option("--out", out, "Report path (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate an upper-bound formula");
  std::string thm;
  BoundParams bp;
  bool json = false;
  bounds->add_option("--thm", thm, "thm1, cor2, thm5, thm6, thm7, thm9, thm11 (or just the number)")->required();
  bounds->add_option("--n", bp.n, "Order");
  bounds->add_option("--d", bp.d, "Diameter");
  bounds->add_option("--g", bp.g, "Girth");
  bounds->add_option("--rho", bp.rho, "Protected radius");
  bounds->add_flag("--json", json, "JSON output");

  auto* bench = app.add_subcommand("bench", "Play over graph ensembles and write CSV");
  std::vector<std::string> specs;
  std::uint64_t bench_seed = 0;
  int instances = 5;
  StrategyOptions bench_opts;
  bench_opts.attach(bench);
  bench->add_option("--gen", specs, "Generator spec (repeatable)")->required();
  bench->add_option("--seed", bench_seed, "First seed")->required();
  bench->add_option("--instances", instances, "Instances per spec")->check(CLI::PositiveNumber);
  bench->add_option("--threads", [](const std::vector<std::string>& v) {
    omp_set_num_threads(std::stoi(v.at(0)));
    return true;
  }, "Worker threads");
  bench->add_option("--out", out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_spec, gen_seed, gen_count, gen_format, out);
    if (*solve) return cmd_solve(solve_src, seed, solve_k, solve_budget, timing, out);
    if (*play_cmd) return cmd_play(play_src, play_seed, play_opts, out);
    if (*verify) return cmd_verify(suites, verify_seed, effort, list, out);
    if (*bounds) return cmd_bounds(thm, bp, json);
    if (*bench) return cmd_bench(specs, bench_seed, instances, bench_opts, bench->count("--strategy") > 0, out);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const StrategyFailure& e) {
    std::cerr << "strategy failure: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
