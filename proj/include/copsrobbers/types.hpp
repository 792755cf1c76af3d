#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace copsrobbers {

using Vertex = std::int32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Sorted list of vertex ids that may repeat (cop positions).
using Multiset = std::vector<Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Selects the serial reference kernel or the OpenMP one. Both must produce
// identical results.
enum class Execution { Serial, Parallel };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Caller supplied an input outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Explicit resource limit hit; never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A cop strategy ran out of cops or hit a planning dead end.
class StrategyFailure : public Error {
 public:
  using Error::Error;
};

// A checked property did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

using Rng = std::mt19937_64;

// Independent generator for (seed, stream); streams never share state.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

VertexSet make_vertex_set(std::vector<Vertex> v);
Multiset make_multiset(std::vector<Vertex> v);

bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace copsrobbers
