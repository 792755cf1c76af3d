#include "copsrobbers/distance_oracle.hpp"

#include <algorithm>
#include <string>

namespace copsrobbers {

namespace {

void bfs_into(const Digraph& d, Vertex source, std::span<int> dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : d.out(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

std::vector<int> all_pairs_distances(const Digraph& d, Execution exec) {
  const int n = d.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  if (exec == Execution::Serial) {
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
      bfs_into(d, s, std::span<int>(table.data() + static_cast<std::size_t>(s) * n, n), queue);
    }
    return table;
  }
#pragma omp parallel
  {
    std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 16)
    for (Vertex s = 0; s < n; ++s) {
      bfs_into(d, s, std::span<int>(table.data() + static_cast<std::size_t>(s) * n, n), queue);
    }
  }
  return table;
}

DistanceOracle::DistanceOracle(const Digraph& d, Options options) : d_(&d), options_(options) {
  if (d.order() <= options_.full_table_cutoff) {
    table_ = std::make_shared<const std::vector<int>>(all_pairs_distances(d, options_.exec));
  }
}

DistanceOracle::Row DistanceOracle::row(Vertex source) const {
  const int n = d_->order();
  if (!d_->valid_vertex(source)) throw PreconditionError("vertex " + std::to_string(source) + " out of range");
  if (table_) {
    return Row(table_, std::span<const int>(table_->data() + static_cast<std::size_t>(source) * n, n));
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(source); it != cache_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.position);
      return Row(it->second.row, *it->second.row);
    }
  }
  auto computed = std::make_shared<std::vector<int>>(n);
  std::vector<Vertex> queue;
  bfs_into(*d_, source, *computed, queue);
  std::shared_ptr<const std::vector<int>> fresh = std::move(computed);

  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(source); it != cache_.end()) {
    return Row(it->second.row, *it->second.row);
  }
  lru_.push_front(source);
  cache_.emplace(source, CacheEntry{fresh, lru_.begin()});
  while (cache_.size() > std::max<std::size_t>(1, options_.cached_rows)) {
    cache_.erase(lru_.back());
    lru_.pop_back();
  }
  return Row(fresh, *fresh);
}

int DistanceOracle::distance(Vertex from, Vertex to) const {
  if (!d_->valid_vertex(to)) throw PreconditionError("vertex " + std::to_string(to) + " out of range");
  return row(from)[to];
}

int DistanceOracle::distance(std::span<const Vertex> from, Vertex to) const {
  int best = kUnreachable;
  for (Vertex a : from) best = std::min(best, distance(a, to));
  return best;
}

VertexSet DistanceOracle::ball(std::span<const Vertex> a, int radius) const {
  if (radius < 0) throw PreconditionError("negative radius");
  const int n = d_->order();
  std::vector<std::uint8_t> in_ball(n, 0);
  for (Vertex s : a) {
    auto r = row(s);
    for (Vertex v = 0; v < n; ++v) {
      if (r[v] <= radius) in_ball[v] = 1;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (in_ball[v]) out.push_back(v);
  }
  return out;
}

Vertex DistanceOracle::next_step(Vertex from, Vertex to) const {
  if (from == to) return from;
  int here = distance(from, to);
  if (here == kUnreachable) return from;
  for (Vertex w : d_->out(from)) {
    if (distance(w, to) == here - 1) return w;
  }
  return from;
}

}  // namespace copsrobbers
