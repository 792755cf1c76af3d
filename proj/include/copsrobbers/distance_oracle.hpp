#pragma once

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "copsrobbers/graph.hpp"

namespace copsrobbers {

// Row-major n x n table of directed BFS distances (kUnreachable where none).
std::vector<int> all_pairs_distances(const Digraph& d, Execution exec = Execution::Parallel);

// Distance queries over an immutable digraph. Small inputs get the full
// all-pairs table up front; larger ones compute per-source rows on demand and
// keep the most recently used ones. Safe to share between threads.
class DistanceOracle {
 public:
  struct Options {
    int full_table_cutoff = 2048;
    std::size_t cached_rows = 256;
    Execution exec = Execution::Parallel;
  };

  // A row stays valid for as long as the handle lives, even after eviction.
  class Row {
   public:
    int operator[](Vertex v) const { return data_[v]; }
    std::span<const int> values() const { return data_; }

   private:
    friend class DistanceOracle;
    Row(std::shared_ptr<const std::vector<int>> owner, std::span<const int> data)
        : owner_(std::move(owner)), data_(data) {}
    std::shared_ptr<const std::vector<int>> owner_;
    std::span<const int> data_;
  };

  explicit DistanceOracle(const Digraph& d) : DistanceOracle(d, Options{}) {}
  DistanceOracle(const Digraph& d, Options options);
  explicit DistanceOracle(const Graph& g) : DistanceOracle(g.as_digraph()) {}
  DistanceOracle(const Graph& g, Options options) : DistanceOracle(g.as_digraph(), options) {}

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const Digraph& digraph() const { return *d_; }
  int order() const { return d_->order(); }
  bool full_table() const { return static_cast<bool>(table_); }

  // Distances from `source` to every vertex.
  Row row(Vertex source) const;
  int distance(Vertex from, Vertex to) const;
  // min over a in A of d(a, v); kUnreachable for empty A.
  int distance(std::span<const Vertex> from, Vertex to) const;

  // B(A, i) answered from the cached rows.
  VertexSet ball(std::span<const Vertex> a, int radius) const;

  // Out-neighbour of `from` that lies on a shortest path to `to`, lowest id
  // first; `from` itself when from == to or `to` is unreachable.
  Vertex next_step(Vertex from, Vertex to) const;

 private:
  const Digraph* d_;
  Options options_;
  std::shared_ptr<const std::vector<int>> table_;

  mutable std::mutex mutex_;
  mutable std::list<Vertex> lru_;
  struct CacheEntry {
    std::shared_ptr<const std::vector<int>> row;
    std::list<Vertex>::iterator position;
  };
  mutable std::unordered_map<Vertex, CacheEntry> cache_;
};

}  // namespace copsrobbers
