#include "copsrobbers/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace copsrobbers {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void warn(const ParseOptions& options, std::string message) {
  if (options.warnings) options.warnings->push_back(std::move(message));
}

// Deduplicates arcs per the strictness flag; `undirected` compares {u,v}.
std::vector<Arc> dedupe(std::vector<std::pair<Arc, std::size_t>> arcs, bool undirected, const ParseOptions& options) {
  std::set<Arc> seen;
  std::vector<Arc> out;
  for (auto [arc, line_no] : arcs) {
    Arc key = arc;
    if (undirected && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) {
      std::string message = "line " + std::to_string(line_no) + ": duplicate edge " +
                            std::to_string(arc.first) + " " + std::to_string(arc.second);
      if (options.strict) throw ParseError(message);
      warn(options, message);
      continue;
    }
    out.push_back(arc);
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text, ParseOptions options) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  }

  std::size_t pos = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw ParseError("graph6: truncated vertex count");
    long long value = 0;
    for (int i = 0; i < count; ++i) value = (value << 6) | (text[pos++] - 63);
    return value;
  };
  long long n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > (1 << 20)) throw ParseError("graph6: vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes, got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Arc> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      if (options.strict) throw ParseError("graph6: nonzero padding bits");
      warn(options, "graph6: nonzero padding bits ignored");
      break;
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  auto put = [&](long long value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, 126);
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_dimacs(std::string_view text, ParseOptions options) {
  long long n = -1;
  long long declared_edges = -1;
  std::vector<std::pair<Arc, std::size_t>> edges;
  auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    auto tok = tokens(lines[idx]);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed problem line");
      }
      n = to_int(tok[2], line_no);
      declared_edges = to_int(tok[3], line_no);
      if (n < 0 || declared_edges < 0) throw ParseError("line " + std::to_string(line_no) + ": negative size");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before problem line");
      if (tok.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": malformed edge line");
      long long u = to_int(tok[1], line_no);
      long long v = to_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
      }
      if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
      edges.push_back({{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, line_no});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw ParseError("missing problem line");
  auto unique_edges = dedupe(std::move(edges), true, options);
  if (static_cast<long long>(unique_edges.size()) != declared_edges) {
    std::string message = "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                          std::to_string(unique_edges.size());
    if (options.strict) throw ParseError(message);
    warn(options, message);
  }
  return Graph(static_cast<int>(n), unique_edges);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Digraph parse_digraph_arcs(std::string_view text, ParseOptions options) {
  long long n = -1;
  std::vector<std::pair<Arc, std::size_t>> arcs;
  auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    auto line = lines[idx];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      n = to_int(tok[0], line_no);
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
      continue;
    }
    if (tok.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    long long u = to_int(tok[0], line_no);
    long long v = to_int(tok[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    arcs.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)}, line_no});
  }
  if (n < 0) throw ParseError("missing vertex count");
  return Digraph(static_cast<int>(n), dedupe(std::move(arcs), false, options));
}

std::string write_digraph_arcs(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace copsrobbers
