#pragma once

#include <optional>
#include <vector>

#include "copsrobbers/distance_oracle.hpp"

namespace copsrobbers {

// Bipartite graph on index ranges [0, left) and [0, right); adjacency lists
// are sorted ascending.
struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adjacency;  // left index -> right indices
};

// Maximum matching by layered augmenting paths (Hopcroft-Karp). Ties resolve
// toward lower indices, so the result is a pure function of the input order.
// Returns mate[l] = matched right index or -1.
std::vector<int> maximum_matching(const Bipartite& h);

// Robber-side vertices joined to cop-side vertices within graph distance
// `radius`. Left and right are disjoint: a vertex on both sides is dropped from
// the left.
struct ReachGraph {
  VertexSet left;
  VertexSet right;
  int radius = 0;
  Bipartite edges;  // indices into left / right
};

ReachGraph build_reach_graph(const DistanceOracle& oracle, const VertexSet& left, const VertexSet& right, int radius);

struct MatchingResult {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // (left vertex, right vertex), ascending by left
  VertexSet unmatched_left;
  // Hall violator S with |S| > |N(S)|, present iff unmatched_left is nonempty.
  std::optional<VertexSet> violator;
  VertexSet violator_neighbors;  // N_H(S)

  bool left_perfect() const { return unmatched_left.empty(); }
};

MatchingResult max_matching(const ReachGraph& h);

// Left vertices reachable from unmatched left vertices along alternating
// paths. This is the maximal deficiency set: |S| - |N(S)| equals the number of
// unmatched left vertices, N(S) is matched into S, and the matching restricted
// to left \ S covers it. Throws PreconditionError when the matching is
// left-perfect.
VertexSet hall_violator(const ReachGraph& h, const MatchingResult& m);

// N_H(S) for a set of left vertices.
VertexSet reach_neighbors(const ReachGraph& h, const VertexSet& s);

}  // namespace copsrobbers
