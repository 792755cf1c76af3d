#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "copsrobbers/graph.hpp"

namespace copsrobbers {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph petersen_graph();
// Cubic graphs from LCF notation: a Hamiltonian cycle plus chords i -> i + jumps[i mod len].
Graph lcf_graph(int n, std::span<const int> jumps);
Graph heawood_graph();  // girth 6, 14 vertices
Graph mcgee_graph();    // girth 7, 24 vertices

Digraph directed_cycle(int n);
Digraph bidirected_complete(int n);

// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

struct RandomGraphOptions {
  int n = 20;
  int max_diameter = 4;
  int min_diameter = 1;
  double edge_probability = -1;  // < 0: pick from n and max_diameter
  int retries = 10000;
};
// G(n, p) resampled until connected with min_diameter <= diameter <= max_diameter.
Graph random_graph_with_diameter(const RandomGraphOptions& options, std::uint64_t seed);

struct RandomDigraphOptions {
  int n = 8;
  double arc_probability = 0.6;
  bool oriented = false;  // at most one arc per vertex pair
  int retries = 100000;
};
// Resampled until the directed diameter is at most 2.
Digraph random_diam2_digraph(const RandomDigraphOptions& options, std::uint64_t seed);

struct RandomBipartiteDigraphOptions {
  int left = 4;
  int right = 4;
  double arc_probability = 0.6;
  int retries = 100000;
};
// Arcs only between the sides 0..left-1 and left..left+right-1; resampled
// until the directed diameter is at most 3.
Digraph random_bipartite_diam3_digraph(const RandomBipartiteDigraphOptions& options, std::uint64_t seed);

// "family" or "family:key=value,key=value".
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string> params;
};
GeneratorSpec parse_generator_spec(std::string_view text);

using AnyGraph = std::variant<Graph, Digraph>;

// Dispatches on spec.family. Throws PreconditionError for unknown families or
// bad parameters and BudgetExceeded when rejection sampling runs out.
AnyGraph generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace copsrobbers
