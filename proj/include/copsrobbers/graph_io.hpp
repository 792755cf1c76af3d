#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "copsrobbers/graph.hpp"

namespace copsrobbers {

struct ParseOptions {
  // Reject duplicate edges and header/count mismatches; otherwise skip them
  // and record a warning.
  bool strict = true;
  std::vector<std::string>* warnings = nullptr;
};

// graph6: an optional ">>graph6<<" header, the 6-bit vertex count, then the
// upper triangle column by column packed six bits per printable byte.
Graph parse_graph6(std::string_view text, ParseOptions options = {});
std::string write_graph6(const Graph& g);

// DIMACS edge format: "c" comments, one "p edge N M" line, then "e u v"
// lines with 1-based ids.
Graph parse_dimacs(std::string_view text, ParseOptions options = {});
std::string write_dimacs(const Graph& g);

// Plain arc list: the vertex count on the first line, then one "u v" arc per
// line with 0-based ids. '#' starts a comment.
Digraph parse_digraph_arcs(std::string_view text, ParseOptions options = {});
std::string write_digraph_arcs(const Digraph& d);

}  // namespace copsrobbers
