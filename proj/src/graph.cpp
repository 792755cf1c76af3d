#include "copsrobbers/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace copsrobbers {

VertexSet make_vertex_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Multiset make_multiset(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError("arc " + std::to_string(u) + "->" + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end()) {
    throw PreconditionError("duplicate arc " + std::to_string(dup->first) + "->" +
                            std::to_string(dup->second));
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) {
    ++out_offsets_[u + 1];
    ++in_offsets_[v + 1];
  }
  for (int v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(arcs.size());
  in_sources_.resize(arcs.size());
  std::vector<int> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<int> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // arcs are sorted by (u, v), so both fills come out sorted.
  for (const auto& [u, v] : arcs) {
    out_targets_[out_fill[u]++] = v;
    in_sources_[in_fill[v]++] = u;
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out_arcs;
  out_arcs.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out(u)) out_arcs.emplace_back(u, v);
  }
  return out_arcs;
}

bool Digraph::is_symmetric() const {
  for (Vertex u = 0; u < n_; ++u) {
    auto o = out(u);
    auto i = in(u);
    if (!std::equal(o.begin(), o.end(), i.begin(), i.end())) return false;
  }
  return true;
}

namespace {

std::vector<Arc> symmetrize(int n, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
    }
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return arcs;
}

}  // namespace

Graph::Graph(int n, const std::vector<Arc>& edges) : arcs_(n, symmetrize(n, edges)) {
  connected_ = is_connected(*this);
}

std::vector<Arc> Graph::edges() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph to_graph(const Digraph& d) {
  if (!d.is_symmetric()) throw PreconditionError("digraph is not symmetric");
  std::vector<Arc> edges;
  for (const auto& [u, v] : d.arcs()) {
    if (u < v) edges.emplace_back(u, v);
  }
  return Graph(d.order(), edges);
}

std::vector<int> bfs_distances(const Digraph& d, std::span<const Vertex> sources) {
  std::vector<int> dist(d.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(d.order());
  for (Vertex s : sources) {
    if (!d.valid_vertex(s)) throw PreconditionError("vertex " + std::to_string(s) + " out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : d.out(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Digraph& d, Vertex source) {
  return bfs_distances(d, std::span<const Vertex>(&source, 1));
}

VertexSet ball(const Digraph& d, std::span<const Vertex> a, int radius) {
  if (radius < 0) throw PreconditionError("negative radius");
  auto dist = bfs_distances(d, a);
  VertexSet out;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v] <= radius) out.push_back(v);
  }
  return out;
}

VertexSet ball(const Graph& g, std::span<const Vertex> a, int radius) {
  return ball(g.as_digraph(), a, radius);
}

VertexSet sphere(const Digraph& d, std::span<const Vertex> a, int radius) {
  if (radius < 1) throw PreconditionError("sphere radius must be >= 1");
  auto dist = bfs_distances(d, a);
  VertexSet out;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v] == radius) out.push_back(v);
  }
  return out;
}

VertexSet sphere(const Graph& g, std::span<const Vertex> a, int radius) {
  return sphere(g.as_digraph(), a, radius);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g.as_digraph(), Vertex{0});
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x == kUnreachable; });
}

bool is_strongly_connected(const Digraph& d) {
  if (d.order() == 0) return true;
  auto fwd = bfs_distances(d, Vertex{0});
  if (std::any_of(fwd.begin(), fwd.end(), [](int x) { return x == kUnreachable; })) return false;
  // Reverse reachability via in-lists.
  std::vector<std::uint8_t> seen(d.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : d.in(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == d.order();
}

namespace {

// Largest finite eccentricity; kUnreachable if some pair is disconnected.
int max_eccentricity(const Digraph& d, Execution exec) {
  const int n = d.order();
  int worst = 0;
  if (exec == Execution::Serial) {
    for (Vertex s = 0; s < n; ++s) {
      auto dist = bfs_distances(d, s);
      worst = std::max(worst, *std::max_element(dist.begin(), dist.end()));
    }
    return worst;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distances(d, s);
    worst = std::max(worst, *std::max_element(dist.begin(), dist.end()));
  }
  return worst;
}

// Shortest u-v path length avoiding the edge uv, or kUnreachable.
int detour_length(const Graph& g, Vertex u, Vertex v, std::vector<int>& dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (x == u && y == v) continue;
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        if (y == v) return dist[y];
        queue.push_back(y);
      }
    }
  }
  return kUnreachable;
}

}  // namespace

int diameter(const Graph& g, Execution exec) {
  if (!g.connected()) throw PreconditionError("diameter of a disconnected graph");
  if (g.order() <= 1) return 0;
  return max_eccentricity(g.as_digraph(), exec);
}

std::optional<int> directed_diameter(const Digraph& d, Execution exec) {
  if (d.order() <= 1) return 0;
  int worst = max_eccentricity(d, exec);
  if (worst == kUnreachable) return std::nullopt;
  return worst;
}

int girth(const Graph& g, Execution exec) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  int best = kInfiniteGirth;
  if (exec == Execution::Serial) {
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    for (int e = 0; e < m; ++e) {
      int detour = detour_length(g, edges[e].first, edges[e].second, dist, queue);
      if (detour != kUnreachable) best = std::min(best, detour + 1);
    }
    return best;
  }
#pragma omp parallel reduction(min : best)
  {
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 32)
    for (int e = 0; e < m; ++e) {
      int detour = detour_length(g, edges[e].first, edges[e].second, dist, queue);
      if (detour != kUnreachable) best = std::min(best, detour + 1);
    }
  }
  return best;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Digraph& d) {
  const int n = d.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      auto visit = [&](Vertex v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
          return true;
        }
        return side[v] != side[u];
      };
      for (Vertex v : d.out(u)) {
        if (!visit(v)) return std::nullopt;
      }
      for (Vertex v : d.in(u)) {
        if (!visit(v)) return std::nullopt;
      }
    }
  }
  return std::vector<std::uint8_t>(side.begin(), side.end());
}

SubDigraph whole(const Digraph& d) { return {std::vector<std::uint8_t>(d.order(), 1), d.arcs()}; }

SubDigraph induced(const Digraph& d, const VertexSet& vertices) {
  SubDigraph h;
  h.member.assign(d.order(), 0);
  for (Vertex v : vertices) {
    if (!d.valid_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    h.member[v] = 1;
  }
  for (const auto& [u, v] : d.arcs()) {
    if (h.member[u] && h.member[v]) h.arcs.emplace_back(u, v);
  }
  return h;
}

}  // namespace copsrobbers
