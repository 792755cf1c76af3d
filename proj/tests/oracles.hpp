#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library's algorithms; they work from raw adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline Matrix adjacency(int n, const std::vector<std::pair<int, int>>& arcs, bool symmetric) {
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : arcs) {
    a[u][v] = true;
    if (symmetric) a[v][u] = true;
  }
  return a;
}

// Floyd-Warshall.
inline std::vector<std::vector<int>> distances(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    }
  }
  return d;
}

// Shortest cycle by depth-first enumeration of simple paths; n <= 12 only.
inline int girth(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = kInf;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int, int)> extend = [&](int start, int v, int length) {
    if (length + 1 >= best) return;
    for (int w = 0; w < n; ++w) {
      if (!a[v][w]) continue;
      if (w == start && length >= 2) best = std::min(best, length + 1);
      if (w > start && !on_path[w]) {
        on_path[w] = true;
        extend(start, w, length + 1);
        on_path[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(s, s, 0);
    on_path[s] = false;
  }
  return best;
}

// Maximum matching size by exhaustive search over left vertices.
inline int max_matching_size(int left, int right, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> used(right, false);
  std::function<int(int)> go = [&](int l) -> int {
    if (l == left) return 0;
    int best = go(l + 1);
    for (int r : adj[l]) {
      if (used[r]) continue;
      used[r] = true;
      best = std::max(best, 1 + go(l + 1));
      used[r] = false;
    }
    return best;
  };
  return go(0);
}

// Largest deficiency |S| - |N(S)| over all subsets S of the left side.
inline int max_deficiency(int left, const std::vector<std::vector<int>>& adj) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << left); ++mask) {
    std::uint64_t nbrs = 0;
    int size = 0;
    for (int l = 0; l < left; ++l) {
      if (!(mask >> l & 1)) continue;
      ++size;
      for (int r : adj[l]) nbrs |= std::uint64_t{1} << r;
    }
    best = std::max(best, size - __builtin_popcountll(nbrs));
  }
  return best;
}

// Reference graph6 encoder for n <= 62.
inline std::string graph6(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::string out(1, static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (a[i][j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

// Cops-and-robbers over ordered cop tuples (n^k encoding), solved by plain
// repeated relaxation to the least fixed point. The robber lives on the
// vertices flagged in `robber_member` and moves along `robber_adj`; cops move
// along `cop_adj`. Returns whether k cops win including placement.
class Game {
 public:
  Game(const Matrix& cop_adj, const Matrix& robber_adj, std::vector<bool> robber_member, int k)
      : cop_adj_(cop_adj), robber_adj_(robber_adj), member_(std::move(robber_member)), n_(static_cast<int>(cop_adj.size())), k_(k) {
    tuples_ = 1;
    for (int i = 0; i < k_; ++i) tuples_ *= n_;
    cop_win_.assign(tuples_ * n_, false);
    robber_win_.assign(tuples_ * n_, false);
    solve();
  }

  bool cops_win() const {
    for (long t = 0; t < tuples_; ++t) {
      auto cops = decode(t);
      bool ok = true;
      for (int r = 0; r < n_ && ok; ++r) {
        if (!member_[r]) continue;
        ok = occupied(cops, r) || cop_win_[t * n_ + r];
      }
      if (ok) return true;
    }
    return false;
  }

 private:
  std::vector<int> decode(long t) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
      c[i] = static_cast<int>(t % n_);
      t /= n_;
    }
    return c;
  }
  long encode(const std::vector<int>& c) const {
    long t = 0;
    for (int i = k_ - 1; i >= 0; --i) t = t * n_ + c[i];
    return t;
  }
  static bool occupied(const std::vector<int>& cops, int r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); }

  void solve() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (long t = 0; t < tuples_; ++t) {
        auto cops = decode(t);
        for (int r = 0; r < n_; ++r) {
          if (!member_[r]) continue;
          long s = t * n_ + r;
          if (!cop_win_[s] && cop_move_wins(cops, r)) {
            cop_win_[s] = true;
            changed = true;
          }
          if (!robber_win_[s] && robber_forced(t, cops, r)) {
            robber_win_[s] = true;
            changed = true;
          }
        }
      }
    }
  }

  // Some joint move of the cops captures or reaches a won robber-to-move state.
  bool cop_move_wins(const std::vector<int>& cops, int r) const {
    std::vector<int> next(k_);
    std::function<bool(int)> go = [&](int i) -> bool {
      if (i == k_) return occupied(next, r) || robber_win_[encode(next) * n_ + r];
      for (int v = 0; v < n_; ++v) {
        if (v != cops[i] && !cop_adj_[cops[i]][v]) continue;
        next[i] = v;
        if (go(i + 1)) return true;
      }
      return false;
    };
    return go(0);
  }

  // Every robber option is capture or a won cops-to-move state.
  bool robber_forced(long t, const std::vector<int>& cops, int r) const {
    if (occupied(cops, r)) return true;
    for (int v = 0; v < n_; ++v) {
      if (v != r && !(member_[v] && robber_adj_[r][v])) continue;
      if (!occupied(cops, v) && !cop_win_[t * n_ + v]) return false;
    }
    return true;
  }

  Matrix cop_adj_;
  Matrix robber_adj_;
  std::vector<bool> member_;
  int n_;
  int k_;
  long tuples_ = 1;
  std::vector<bool> cop_win_;
  std::vector<bool> robber_win_;
};

inline bool cops_win(const Matrix& a, int k) { return Game(a, a, std::vector<bool>(a.size(), true), k).cops_win(); }

}  // namespace oracle
