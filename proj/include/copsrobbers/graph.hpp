#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "copsrobbers/types.hpp"

namespace copsrobbers {

using Arc = std::pair<Vertex, Vertex>;

// Immutable simple digraph in compressed sparse row form. Out- and
// in-adjacency lists are sorted; the in-lists are the exact transpose of the
// out-lists.
class Digraph {
 public:
  Digraph() = default;
  // Throws PreconditionError on self-loops, duplicate arcs or ids outside
  // [0, n).
  Digraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  std::size_t arc_count() const { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  int out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  int in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  bool has_arc(Vertex u, Vertex v) const;

  // Arcs in (source, target) lexicographic order.
  std::vector<Arc> arcs() const;
  bool is_symmetric() const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_;
  }

 private:
  int n_ = 0;
  std::vector<int> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<int> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

// Immutable simple undirected graph, stored as a symmetric digraph so the
// engine and solver can treat both uniformly.
class Graph {
 public:
  Graph() = default;
  // Each undirected edge appears once, in either orientation.
  Graph(int n, const std::vector<Arc>& edges);

  int order() const { return arcs_.order(); }
  std::size_t edge_count() const { return arcs_.arc_count() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const { return arcs_.out(v); }
  int degree(Vertex v) const { return arcs_.out_degree(v); }
  bool adjacent(Vertex u, Vertex v) const { return arcs_.has_arc(u, v); }
  bool valid_vertex(Vertex v) const { return arcs_.valid_vertex(v); }
  bool connected() const { return connected_; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Arc> edges() const;

  const Digraph& as_digraph() const { return arcs_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.arcs_ == b.arcs_; }

 private:
  Digraph arcs_;
  bool connected_ = true;
};

// Converts a symmetric digraph back to an undirected graph.
Graph to_graph(const Digraph& d);

// Forward BFS from every source in `sources`; kUnreachable where no path.
std::vector<int> bfs_distances(const Digraph& d, std::span<const Vertex> sources);
std::vector<int> bfs_distances(const Digraph& d, Vertex source);

// B(A, i): vertices reachable from A by a directed path of length <= i.
VertexSet ball(const Digraph& d, std::span<const Vertex> a, int radius);
VertexSet ball(const Graph& g, std::span<const Vertex> a, int radius);
// B'(A, i) = B(A, i) \ B(A, i - 1), for i >= 1.
VertexSet sphere(const Digraph& d, std::span<const Vertex> a, int radius);
VertexSet sphere(const Graph& g, std::span<const Vertex> a, int radius);

bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& d);

// Exact diameter by a BFS sweep. Throws PreconditionError if disconnected.
int diameter(const Graph& g, Execution exec = Execution::Parallel);
// Largest directed distance, or nullopt when not strongly connected.
std::optional<int> directed_diameter(const Digraph& d, Execution exec = Execution::Parallel);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Length of a shortest cycle, or kInfiniteGirth for forests. Computed edge by
// edge: 1 + the shortest u-v path that avoids the edge uv.
int girth(const Graph& g, Execution exec = Execution::Parallel);

// 2-colouring of the underlying undirected graph (side 0 / 1), if bipartite.
std::optional<std::vector<std::uint8_t>> bipartition(const Digraph& d);

// Sub-digraph on the robber's side of a restricted game: a vertex mask plus
// the arcs kept from the host digraph.
struct SubDigraph {
  std::vector<std::uint8_t> member;  // indexed by host vertex
  std::vector<Arc> arcs;             // subset of host arcs, both ends members
};

SubDigraph whole(const Digraph& d);
SubDigraph induced(const Digraph& d, const VertexSet& vertices);

}  // namespace copsrobbers
