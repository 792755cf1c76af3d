#include "copsrobbers/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <string>

namespace copsrobbers {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::int32_t load(std::int32_t& cell) { return std::atomic_ref<std::int32_t>(cell).load(std::memory_order_relaxed); }

void store(std::int32_t& cell, std::int32_t value) {
  std::atomic_ref<std::int32_t>(cell).store(value, std::memory_order_relaxed);
}

// Won strictly before sweep t. Entries written during sweep t read as not won,
// which makes every sweep a pure function of the previous one.
bool won_before(std::int32_t rank, int t) { return rank != -1 && rank < t; }

}  // namespace

std::uint64_t default_state_budget() {
  const char* env = std::getenv("COPSROBBERS_STATE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultStateBudget;
  try {
    std::size_t used = 0;
    auto value = std::stoull(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("COPSROBBERS_STATE_BUDGET must be a positive integer, got '") + env + "'");
}

std::uint64_t MultisetIndex::count(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(m, i + 1) = C(m, i) * (m - i) / (i + 1) stays integral at every step.
  unsigned __int128 c = 1;
  const std::uint64_t m = static_cast<std::uint64_t>(n) + k - 1;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(k); ++i) {
    c = c * (m - i) / (i + 1);
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

MultisetIndex::MultisetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw PreconditionError("multiset index needs n >= 1 and k >= 1");
  size_ = count(n, k);
  const int rows = n + k;
  table_.assign(static_cast<std::size_t>(rows) * (k + 1), 0);
  for (int a = 0; a < rows; ++a) {
    table_[static_cast<std::size_t>(a) * (k + 1)] = 1;
    for (int b = 1; b <= std::min(a, k); ++b) {
      table_[static_cast<std::size_t>(a) * (k + 1) + b] = saturating_add(binom(a - 1, b - 1), binom(a - 1, b));
    }
  }
}

std::uint64_t MultisetIndex::rank(std::span<const Vertex> sorted) const {
  std::uint64_t id = 0;
  for (int i = 0; i < k_; ++i) id += binom(sorted[i] + i, i + 1);
  return id;
}

Multiset MultisetIndex::unrank(std::uint64_t id) const {
  Multiset a(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    // Largest b in [i, n - 1 + i] with C(b, i + 1) <= id.
    int lo = i;
    int hi = n_ - 1 + i;
    while (lo < hi) {
      int mid = lo + (hi - lo + 1) / 2;
      if (binom(mid, i + 1) <= id) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    id -= binom(lo, i + 1);
    a[i] = lo - i;
  }
  return a;
}

namespace {

MultisetIndex checked_index(const Digraph& board, const SubDigraph& h, int k, const SolverOptions& options) {
  const int n = board.order();
  if (n < 1) throw PreconditionError("solver needs a nonempty board");
  if (k < 1) throw PreconditionError("solver needs k >= 1");
  if (static_cast<int>(h.member.size()) != n) throw PreconditionError("sub-digraph mask does not match the board");
  if (std::none_of(h.member.begin(), h.member.end(), [](std::uint8_t m) { return m != 0; })) {
    throw PreconditionError("robber sub-digraph is empty");
  }
  const std::uint64_t states = saturating_mul(saturating_mul(MultisetIndex::count(n, k), n), 2);
  if (states > options.state_budget) {
    throw BudgetExceeded("solver: " + std::to_string(k) + " cops on " + std::to_string(n) + " vertices need " +
                         (states == kSaturated ? std::string("more than 2^64") : std::to_string(states)) +
                         " states, budget is " + std::to_string(options.state_budget));
  }
  return MultisetIndex(n, k);
}

}  // namespace

WinTable::WinTable(const Digraph& board, const SubDigraph& robber_graph, int k, const SolverOptions& options)
    : board_(board), h_(robber_graph), index_(checked_index(board, robber_graph, k, options)) {
  const int n = board.order();
  h_out_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (h_.member[v]) h_out_[v].push_back(v);
  }
  for (const auto& [u, v] : h_.arcs) {
    if (!board.valid_vertex(u) || !board.valid_vertex(v) || !h_.member[u] || !h_.member[v] || !board.has_arc(u, v)) {
      throw PreconditionError("robber sub-digraph arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not a board arc between members");
    }
    h_out_[u].push_back(v);
  }
  for (auto& opts : h_out_) std::sort(opts.begin(), opts.end());

  const std::uint64_t m = index_.size();
  cop_.assign(m * n, -1);
  robber_.assign(m * n, -1);
  for (std::uint64_t id = 0; id < m; ++id) {
    for (Vertex v : index_.unrank(id)) {
      cop_[id * n + v] = 0;
      robber_[id * n + v] = 0;
    }
  }

  // Upper bound on cached successor entries before deduplication.
  std::uint64_t estimate = 0;
  for (std::uint64_t id = 0; id < m && estimate <= options.transition_budget; ++id) {
    std::uint64_t product = 1;
    for (Vertex v : index_.unrank(id)) product = saturating_mul(product, 1 + board.out_degree(v));
    estimate = saturating_add(estimate, product);
  }
  if (estimate <= options.transition_budget) build_successors();

  for (int t = 1;; ++t) {
    if (!sweep(t, options.exec)) break;
    sweeps_ = t;
  }
}

void WinTable::successors_into(std::uint64_t id, std::vector<std::uint64_t>& out, std::vector<Vertex>& scratch) const {
  out.clear();
  const int k = index_.k();
  const Multiset a = index_.unrank(id);
  std::vector<int> choice(k, 0);
  scratch.assign(k, 0);
  std::vector<Vertex> sorted(k);
  // Odometer over per-cop options (0 = stay, j = j-th out-neighbour). Equal
  // positions take non-decreasing option indices, which skips permutations of
  // the same outcome.
  auto option = [&](int i) { return choice[i] == 0 ? a[i] : board_.out(a[i])[choice[i] - 1]; };
  for (int i = 1; i < k; ++i) {
    if (a[i] == a[i - 1]) choice[i] = choice[i - 1];
  }
  while (true) {
    for (int i = 0; i < k; ++i) sorted[i] = option(i);
    std::sort(sorted.begin(), sorted.end());
    out.push_back(index_.rank(sorted));
    int i = k - 1;
    while (i >= 0 && choice[i] == board_.out_degree(a[i])) --i;
    if (i < 0) break;
    ++choice[i];
    for (int j = i + 1; j < k; ++j) choice[j] = a[j] == a[j - 1] ? choice[j - 1] : 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<std::uint64_t> WinTable::successors(std::uint64_t id) const {
  std::vector<std::uint64_t> out;
  std::vector<Vertex> scratch;
  if (cached_) return {succ_.begin() + succ_offsets_[id], succ_.begin() + succ_offsets_[id + 1]};
  successors_into(id, out, scratch);
  return out;
}

void WinTable::build_successors() {
  const std::uint64_t m = index_.size();
  succ_offsets_.assign(m + 1, 0);
  std::vector<std::uint64_t> out;
  std::vector<Vertex> scratch;
  for (std::uint64_t id = 0; id < m; ++id) {
    successors_into(id, out, scratch);
    succ_.insert(succ_.end(), out.begin(), out.end());
    succ_offsets_[id + 1] = succ_.size();
  }
  cached_ = true;
}

bool WinTable::sweep_block(int t, std::uint64_t id, std::vector<std::uint64_t>& succ, std::vector<Vertex>& scratch) {
  const int n = order();
  std::span<const std::uint64_t> next;
  bool generated = false;
  bool changed = false;
  for (Vertex r = 0; r < n; ++r) {
    if (!h_.member[r]) continue;
    const std::uint64_t cell = id * n + r;
    if (load(cop_[cell]) == -1) {
      if (!generated) {
        if (cached_) {
          next = {succ_.data() + succ_offsets_[id], succ_.data() + succ_offsets_[id + 1]};
        } else {
          successors_into(id, succ, scratch);
          next = succ;
        }
        generated = true;
      }
      for (std::uint64_t s : next) {
        if (won_before(load(robber_[s * n + r]), t)) {
          store(cop_[cell], t);
          changed = true;
          break;
        }
      }
    }
    if (load(robber_[cell]) == -1) {
      bool all = true;
      for (Vertex option : h_out_[r]) {
        if (!won_before(load(cop_[id * n + option]), t)) {
          all = false;
          break;
        }
      }
      if (all) {
        store(robber_[cell], t);
        changed = true;
      }
    }
  }
  return changed;
}

bool WinTable::sweep(int t, Execution exec) {
  const auto m = static_cast<std::int64_t>(index_.size());
  bool changed = false;
  if (exec == Execution::Serial) {
    std::vector<std::uint64_t> succ;
    std::vector<Vertex> scratch;
    for (std::int64_t id = 0; id < m; ++id) changed = sweep_block(t, id, succ, scratch) || changed;
    return changed;
  }
#pragma omp parallel reduction(|| : changed)
  {
    std::vector<std::uint64_t> succ;
    std::vector<Vertex> scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t id = 0; id < m; ++id) changed = sweep_block(t, id, succ, scratch) || changed;
  }
  return changed;
}

bool WinTable::is_fixed_point() const {
  const int n = order();
  for (std::uint64_t id = 0; id < index_.size(); ++id) {
    const auto next = successors(id);
    for (Vertex r = 0; r < n; ++r) {
      if (!h_.member[r]) continue;
      if (cop_rank(id, r) == -1 &&
          std::any_of(next.begin(), next.end(), [&](std::uint64_t s) { return robber_rank(s, r) != -1; })) {
        return false;
      }
      if (robber_rank(id, r) == -1 &&
          std::all_of(h_out_[r].begin(), h_out_[r].end(), [&](Vertex o) { return cop_rank(id, o) != -1; })) {
        return false;
      }
    }
  }
  return true;
}

int WinTable::cop_rank(const Multiset& cops, Vertex r) const {
  if (static_cast<int>(cops.size()) != k()) throw PreconditionError("cop multiset has the wrong size");
  return cop_rank(index_.rank(cops), r);
}

int WinTable::robber_rank(const Multiset& cops, Vertex r) const {
  if (static_cast<int>(cops.size()) != k()) throw PreconditionError("cop multiset has the wrong size");
  return robber_rank(index_.rank(cops), r);
}

std::optional<Multiset> WinTable::winning_placement() const {
  const int n = order();
  std::optional<std::uint64_t> best;
  int best_worst = std::numeric_limits<int>::max();
  for (std::uint64_t id = 0; id < index_.size(); ++id) {
    int worst = 0;
    for (Vertex r = 0; r < n && worst != -1; ++r) {
      if (!h_.member[r]) continue;
      int rank = cop_rank(id, r);
      worst = rank == -1 ? -1 : std::max(worst, rank);
    }
    if (worst != -1 && worst < best_worst) {
      best_worst = worst;
      best = id;
    }
  }
  if (!best) return std::nullopt;
  return index_.unrank(*best);
}

std::uint64_t WinTable::states() const {
  const auto members = std::count(h_.member.begin(), h_.member.end(), std::uint8_t{1});
  return index_.size() * static_cast<std::uint64_t>(members) * 2;
}

Json to_json(const SolveResult& r, bool timing) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["copwin"] = r.copwin;
  j["states_visited"] = r.states_visited;
  j["elapsed_ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
  return j;
}

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolveResult solve_cop_win(const Digraph& board, int k, const SolverOptions& options) {
  auto start = std::chrono::steady_clock::now();
  WinTable table(board, whole(board), k, options);
  return {board.order(), k, table.cops_win(), table.states(), millis_since(start)};
}

bool cop_win(const Digraph& board, int k, const SolverOptions& options) {
  return solve_cop_win(board, k, options).copwin;
}

bool cop_win(const Graph& board, int k, const SolverOptions& options) {
  return cop_win(board.as_digraph(), k, options);
}

bool restricted_cop_win(const Digraph& d, const SubDigraph& h, int k, const SolverOptions& options) {
  return WinTable(d, h, k, options).cops_win();
}

namespace {

SolveResult search_cop_number(const Digraph& d, const SubDigraph& h, const SolverOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const int members = static_cast<int>(std::count(h.member.begin(), h.member.end(), std::uint8_t{1}));
  SolveResult result{d.order(), 0, false, 0, 0};
  // |V(H)| cops cover every robber vertex at placement, so the search ends.
  for (int k = 1; k <= std::max(members, 1); ++k) {
    WinTable table(d, h, k, options);
    result.states_visited += table.states();
    if (table.cops_win()) {
      result.k = k;
      result.copwin = true;
      break;
    }
  }
  result.elapsed_ms = millis_since(start);
  if (!result.copwin) throw InvariantViolation("cop number search exhausted without a win");
  return result;
}

}  // namespace

SolveResult solve_cop_number(const Digraph& board, const SolverOptions& options) {
  return search_cop_number(board, whole(board), options);
}

int cop_number(const Digraph& board, const SolverOptions& options) { return solve_cop_number(board, options).k; }

int cop_number(const Graph& board, const SolverOptions& options) { return cop_number(board.as_digraph(), options); }

int restricted_cop_number(const Digraph& d, const SubDigraph& h, const SolverOptions& options) {
  return search_cop_number(d, h, options).k;
}

OptimalRobber::OptimalRobber(const Digraph& board, int k, SolverOptions options)
    : OptimalRobber(board, whole(board), k, options) {}

OptimalRobber::OptimalRobber(const Digraph& board, const SubDigraph& robber_graph, int k, SolverOptions options)
    : board_(board), h_(robber_graph), k_(k), options_(options) {
  if (static_cast<int>(h_.member.size()) != board.order()) {
    throw PreconditionError("sub-digraph mask does not match the board");
  }
}

const WinTable& OptimalRobber::table() {
  if (!table_) table_ = std::make_unique<WinTable>(board_, h_, k_, options_);
  return *table_;
}

Vertex OptimalRobber::place(const Multiset& cops) {
  std::vector<Vertex> free;
  Vertex first_member = -1;
  for (Vertex v = 0; v < board_.order(); ++v) {
    if (!h_.member[v]) continue;
    if (first_member < 0) first_member = v;
    if (!std::binary_search(cops.begin(), cops.end(), v)) free.push_back(v);
  }
  if (first_member < 0) throw PreconditionError("robber sub-digraph is empty");
  if (free.empty()) return first_member;
  const auto& t = table();
  Vertex best = free.front();
  int best_rank = 0;
  for (Vertex v : free) {
    int rank = t.cop_rank(cops, v);
    if (rank == -1) return v;
    if (rank > best_rank) {
      best_rank = rank;
      best = v;
    }
  }
  return best;
}

Vertex OptimalRobber::move(const GameState& state) {
  const Vertex r = *state.robber;
  const auto& t = table();
  std::vector<Vertex> options{r};
  for (const auto& [u, v] : h_.arcs) {
    if (u == r) options.push_back(v);
  }
  std::sort(options.begin(), options.end());
  Vertex best = r;
  int best_rank = -2;
  for (Vertex v : options) {
    if (std::binary_search(state.cops.begin(), state.cops.end(), v)) continue;
    int rank = t.cop_rank(state.cops, v);
    if (rank == -1) return v;
    if (rank > best_rank) {
      best_rank = rank;
      best = v;
    }
  }
  return best;
}

OptimalCops::OptimalCops(const Digraph& board, int k, SolverOptions options)
    : board_(board), table_(board, whole(board), k, options) {}

Multiset OptimalCops::place(int k, std::uint64_t) {
  if (k != table_.k()) throw PreconditionError("optimal cops were solved for a different k");
  if (auto m = table_.winning_placement()) return *m;
  return Multiset(k, 0);
}

Multiset OptimalCops::move(const GameState& state) {
  const Vertex r = *state.robber;
  const auto id = table_.index().rank(state.cops);
  std::uint64_t best = id;
  int best_rank = std::numeric_limits<int>::max();
  for (std::uint64_t s : table_.successors(id)) {
    int rank = table_.robber_rank(s, r);
    if (rank != -1 && rank < best_rank) {
      best_rank = rank;
      best = s;
    }
  }
  return table_.index().unrank(best);
}

}  // namespace copsrobbers
