#include "copsrobbers/matching.hpp"

#include <algorithm>
#include <limits>

namespace copsrobbers {

namespace {

constexpr int kFree = -1;
constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const Bipartite& h)
      : h_(h), mate_left_(h.left, kFree), mate_right_(h.right, kFree), layer_(h.left), next_edge_(h.left) {}

  std::vector<int> run() {
    while (build_layers()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (int l = 0; l < h_.left; ++l) {
        if (mate_left_[l] == kFree) augment(l);
      }
    }
    return mate_left_;
  }

 private:
  // BFS from free left vertices; true if some free right vertex is reachable.
  bool build_layers() {
    std::vector<int> queue;
    for (int l = 0; l < h_.left; ++l) {
      if (mate_left_[l] == kFree) {
        layer_[l] = 0;
        queue.push_back(l);
      } else {
        layer_[l] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int l = queue[head];
      for (int r : h_.adjacency[l]) {
        int next = mate_right_[r];
        if (next == kFree) {
          found = true;
        } else if (layer_[next] == kInf) {
          layer_[next] = layer_[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment(int l) {
    const auto& adj = h_.adjacency[l];
    for (int& i = next_edge_[l]; i < static_cast<int>(adj.size()); ++i) {
      int r = adj[i];
      int next = mate_right_[r];
      if (next == kFree || (layer_[next] == layer_[l] + 1 && augment(next))) {
        mate_left_[l] = r;
        mate_right_[r] = l;
        ++i;
        return true;
      }
    }
    layer_[l] = kInf;
    return false;
  }

  const Bipartite& h_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> layer_;
  std::vector<int> next_edge_;
};

std::vector<int> index_of(const VertexSet& side, int n) {
  std::vector<int> idx(n, -1);
  for (int i = 0; i < static_cast<int>(side.size()); ++i) idx[side[i]] = i;
  return idx;
}

}  // namespace

std::vector<int> maximum_matching(const Bipartite& h) { return HopcroftKarp(h).run(); }

ReachGraph build_reach_graph(const DistanceOracle& oracle, const VertexSet& left, const VertexSet& right, int radius) {
  if (radius < 0) throw PreconditionError("negative reach radius");
  for (const auto* side : {&left, &right}) {
    for (Vertex v : *side) {
      if (!oracle.digraph().valid_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
  }
  ReachGraph h;
  h.left = set_difference(make_vertex_set(left), make_vertex_set(right));
  h.right = make_vertex_set(right);
  h.radius = radius;
  h.edges.left = static_cast<int>(h.left.size());
  h.edges.right = static_cast<int>(h.right.size());
  h.edges.adjacency.resize(h.left.size());
  for (int i = 0; i < h.edges.left; ++i) {
    // d(cop, target): cops travel toward the robber-side vertex.
    for (int j = 0; j < h.edges.right; ++j) {
      if (oracle.distance(h.right[j], h.left[i]) <= radius) h.edges.adjacency[i].push_back(j);
    }
  }
  return h;
}

MatchingResult max_matching(const ReachGraph& h) {
  auto mate = maximum_matching(h.edges);
  MatchingResult result;
  for (int i = 0; i < h.edges.left; ++i) {
    if (mate[i] == kFree) {
      result.unmatched_left.push_back(h.left[i]);
    } else {
      result.pairs.emplace_back(h.left[i], h.right[mate[i]]);
    }
  }
  if (!result.unmatched_left.empty()) {
    result.violator = hall_violator(h, result);
    result.violator_neighbors = reach_neighbors(h, *result.violator);
  }
  return result;
}

VertexSet hall_violator(const ReachGraph& h, const MatchingResult& m) {
  if (m.unmatched_left.empty()) throw PreconditionError("matching covers the left side; no Hall violator");
  const int n = h.left.empty() ? 0 : std::max(h.left.back(), h.right.empty() ? 0 : h.right.back()) + 1;
  auto left_idx = index_of(h.left, n);
  auto right_idx = index_of(h.right, n);
  std::vector<int> right_mate(h.edges.right, kFree);
  for (const auto& [l, r] : m.pairs) right_mate[right_idx[r]] = left_idx[l];

  std::vector<std::uint8_t> seen_left(h.edges.left, 0);
  std::vector<std::uint8_t> seen_right(h.edges.right, 0);
  std::vector<int> queue;
  for (Vertex v : m.unmatched_left) {
    seen_left[left_idx[v]] = 1;
    queue.push_back(left_idx[v]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int r : h.edges.adjacency[queue[head]]) {
      if (seen_right[r]) continue;
      seen_right[r] = 1;
      int l = right_mate[r];
      // A free right vertex here would be an augmenting path: the matching
      // was not maximum.
      if (l == kFree) throw InvariantViolation("hall_violator: matching is not maximum");
      if (!seen_left[l]) {
        seen_left[l] = 1;
        queue.push_back(l);
      }
    }
  }
  VertexSet s;
  for (int i = 0; i < h.edges.left; ++i) {
    if (seen_left[i]) s.push_back(h.left[i]);
  }
  return s;
}

VertexSet reach_neighbors(const ReachGraph& h, const VertexSet& s) {
  std::vector<std::uint8_t> hit(h.edges.right, 0);
  for (int i = 0; i < h.edges.left; ++i) {
    if (!set_contains(s, h.left[i])) continue;
    for (int r : h.edges.adjacency[i]) hit[r] = 1;
  }
  VertexSet out;
  for (int j = 0; j < h.edges.right; ++j) {
    if (hit[j]) out.push_back(h.right[j]);
  }
  return out;
}

}  // namespace copsrobbers
