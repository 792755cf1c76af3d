#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "copsrobbers/game.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

// Default cap on (n+k-1 choose k) * n * 2 table states. The environment
// variable COPSROBBERS_STATE_BUDGET overrides it.
inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000;
std::uint64_t default_state_budget();

struct SolverOptions {
  std::uint64_t state_budget = default_state_budget();
  // Successor lists are cached when their total length stays under this;
  // otherwise they are regenerated on every sweep.
  std::uint64_t transition_budget = 50'000'000;
  Execution exec = Execution::Parallel;
};

// Dense ranking of size-k multisets over [0, n) by the combinatorial number
// system: sorted a_0 <= ... <= a_{k-1} maps to sum C(a_i + i, i + 1).
class MultisetIndex {
 public:
  MultisetIndex(int n, int k);
  int order() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t rank(std::span<const Vertex> sorted) const;
  Multiset unrank(std::uint64_t id) const;

  // C(n+k-1, k), saturating at UINT64_MAX.
  static std::uint64_t count(int n, int k);

 private:
  std::uint64_t binom(int a, int b) const { return table_[static_cast<std::size_t>(a) * (k_ + 1) + b]; }
  int n_;
  int k_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> table_;
};

// Retrograde table for k cops on `board` against a robber confined to
// `robber_graph`. Ranks: -1 = not won by the cops; 0 = co-location; a state
// first found winning in sweep t has rank t. Cops to move in "cop" ranks,
// robber to move in "robber" ranks.
class WinTable {
 public:
  WinTable(const Digraph& board, const SubDigraph& robber_graph, int k, const SolverOptions& options = {});

  int k() const { return index_.k(); }
  int order() const { return index_.order(); }
  const MultisetIndex& index() const { return index_; }
  const SubDigraph& robber_graph() const { return h_; }

  int cop_rank(const Multiset& cops, Vertex r) const;
  int robber_rank(const Multiset& cops, Vertex r) const;
  int cop_rank(std::uint64_t id, Vertex r) const { return cop_[id * order() + r]; }
  int robber_rank(std::uint64_t id, Vertex r) const { return robber_[id * order() + r]; }

  // Placement phase: the cops win iff some multiset M leaves every robber
  // vertex either occupied or a won cops-to-move state. Returns the winning
  // placement with the smallest worst-case rank, ties to the lowest index.
  std::optional<Multiset> winning_placement() const;
  bool cops_win() const { return winning_placement().has_value(); }

  // Robber-side states considered: multisets * |V(H)| * 2.
  std::uint64_t states() const;
  int sweeps() const { return sweeps_; }

  // One more application of the operator (ignoring ranks) adds no state.
  bool is_fixed_point() const;

  std::span<const std::int32_t> cop_ranks() const { return cop_; }
  std::span<const std::int32_t> robber_ranks() const { return robber_; }

  // Successor multiset ids of `id` (each cop stays or follows one arc).
  std::vector<std::uint64_t> successors(std::uint64_t id) const;

 private:
  void build_successors();
  void successors_into(std::uint64_t id, std::vector<std::uint64_t>& out, std::vector<Vertex>& scratch) const;
  bool sweep(int t, Execution exec);
  bool sweep_block(int t, std::uint64_t id, std::vector<std::uint64_t>& succ, std::vector<Vertex>& scratch);

  const Digraph& board_;
  SubDigraph h_;
  std::vector<std::vector<Vertex>> h_out_;  // robber options per vertex, self first
  MultisetIndex index_;
  std::vector<std::int32_t> cop_;
  std::vector<std::int32_t> robber_;
  bool cached_ = false;
  std::vector<std::uint64_t> succ_offsets_;
  std::vector<std::uint64_t> succ_;
  int sweeps_ = 0;
};

// Cop moves still needed from a cops-to-move state of the given rank; -1 when
// the state is not won.
inline int rounds_to_capture(int cop_rank) { return cop_rank < 0 ? -1 : (cop_rank + 1) / 2; }

struct SolveResult {
  int n = 0;
  int k = 0;
  bool copwin = false;
  std::uint64_t states_visited = 0;
  double elapsed_ms = 0;
};

// elapsed_ms is written as null unless `timing` is set, so that repeated runs
// produce identical bytes.
Json to_json(const SolveResult& r, bool timing = false);

bool cop_win(const Digraph& board, int k, const SolverOptions& options = {});
bool cop_win(const Graph& board, int k, const SolverOptions& options = {});
SolveResult solve_cop_win(const Digraph& board, int k, const SolverOptions& options = {});

// Least k with cop_win, searched upward from 1. `states_visited` sums over
// the trials.
SolveResult solve_cop_number(const Digraph& board, const SolverOptions& options = {});
int cop_number(const Digraph& board, const SolverOptions& options = {});
int cop_number(const Graph& board, const SolverOptions& options = {});

// c(D, H): the robber is confined to H, the cops move on D.
int restricted_cop_number(const Digraph& d, const SubDigraph& h, const SolverOptions& options = {});
bool restricted_cop_win(const Digraph& d, const SubDigraph& h, int k, const SolverOptions& options = {});

// Robber extracted from the table: keeps to states the cops have not won,
// otherwise delays capture as long as possible. Ties go to the lowest id.
// The table is built on first use; a placement where the cops already cover
// every robber vertex is answered without it.
class OptimalRobber final : public RobberStrategy {
 public:
  OptimalRobber(const Digraph& board, int k, SolverOptions options = {});
  OptimalRobber(const Digraph& board, const SubDigraph& robber_graph, int k, SolverOptions options = {});
  std::string name() const override { return "optimal"; }
  Vertex place(const Multiset& cops) override;
  Vertex move(const GameState& state) override;

 private:
  const WinTable& table();
  const Digraph& board_;
  SubDigraph h_;
  int k_;
  SolverOptions options_;
  std::unique_ptr<WinTable> table_;
};

// Cops extracted from the table: winning placement, then the successor with
// the smallest robber-to-move rank.
class OptimalCops final : public CopStrategy {
 public:
  OptimalCops(const Digraph& board, int k, SolverOptions options = {});
  std::string name() const override { return "optimal"; }
  Multiset place(int k, std::uint64_t seed) override;
  Multiset move(const GameState& state) override;

 private:
  const Digraph& board_;
  WinTable table_;
};

}  // namespace copsrobbers
