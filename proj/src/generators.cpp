#include "copsrobbers/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace copsrobbers {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Arc> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Arc> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Arc> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Arc> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Arc> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph lcf_graph(int n, std::span<const int> jumps) {
  require(n >= 3 && !jumps.empty(), "LCF graph needs n >= 3 and a jump list");
  std::set<Arc> edges;
  auto add = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
  for (Vertex v = 0; v < n; ++v) {
    add(v, (v + 1) % n);
    int jump = jumps[v % jumps.size()];
    add(v, ((v + jump) % n + n) % n);
  }
  return Graph(n, std::vector<Arc>(edges.begin(), edges.end()));
}

Graph heawood_graph() {
  constexpr std::array<int, 2> kJumps{5, -5};
  return lcf_graph(14, kJumps);
}

Graph mcgee_graph() {
  constexpr std::array<int, 3> kJumps{12, 7, -7};
  return lcf_graph(24, kJumps);
}

Digraph directed_cycle(int n) {
  require(n >= 2, "directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, arcs);
}

Digraph bidirected_complete(int n) {
  require(n >= 1, "complete digraph needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, arcs);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  Rng rng = make_rng(seed, 0x7ee);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = pick(rng);

  std::vector<int> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Arc> edges;
  for (Vertex x : prufer) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

Graph random_graph_with_diameter(const RandomGraphOptions& options, std::uint64_t seed) {
  const int n = options.n;
  require(n >= 1, "random graph needs n >= 1");
  require(options.max_diameter >= 1 || n == 1, "max_diameter must be >= 1");
  require(options.min_diameter <= options.max_diameter, "min_diameter exceeds max_diameter");
  double p = options.edge_probability;
  if (p < 0) {
    // Rough threshold for diameter <= d: p^d n^(d-1) ~ 2 ln n.
    const double d = options.max_diameter;
    p = 1.5 * std::pow(2.0 * std::log(std::max(n, 2)) / std::pow(n, d - 1), 1.0 / d);
    p = std::clamp(p, 0.05, 1.0);
  }
  require(p > 0 && p <= 1, "edge probability must lie in (0, 1]");
  Rng rng = make_rng(seed, 0xd1a);
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    std::vector<Arc> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (!g.connected()) continue;
    int d = diameter(g, Execution::Serial);
    if (d <= options.max_diameter && d >= std::min(options.min_diameter, n - 1)) return g;
  }
  throw BudgetExceeded("no connected graph with diameter in [" + std::to_string(options.min_diameter) + ", " +
                       std::to_string(options.max_diameter) + "] after " + std::to_string(options.retries) +
                       " samples");
}

Digraph random_diam2_digraph(const RandomDigraphOptions& options, std::uint64_t seed) {
  const int n = options.n;
  require(n >= 2, "digraph needs n >= 2");
  require(options.arc_probability > 0 && options.arc_probability <= 1, "arc probability must lie in (0, 1]");
  Rng rng = make_rng(seed, 0xd12);
  std::bernoulli_distribution coin(options.arc_probability);
  std::bernoulli_distribution fair(0.5);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (options.oriented) {
          if (coin(rng)) {
            if (fair(rng)) {
              arcs.emplace_back(u, v);
            } else {
              arcs.emplace_back(v, u);
            }
          }
        } else {
          if (coin(rng)) arcs.emplace_back(u, v);
          if (coin(rng)) arcs.emplace_back(v, u);
        }
      }
    }
    Digraph d(n, arcs);
    auto diam = directed_diameter(d, Execution::Serial);
    if (diam && *diam <= 2) return d;
  }
  throw BudgetExceeded("no diameter-2 digraph on " + std::to_string(n) + " vertices after " +
                       std::to_string(options.retries) + " samples");
}

Digraph random_bipartite_diam3_digraph(const RandomBipartiteDigraphOptions& options, std::uint64_t seed) {
  require(options.left >= 1 && options.right >= 1, "both sides need at least one vertex");
  require(options.arc_probability > 0 && options.arc_probability <= 1, "arc probability must lie in (0, 1]");
  const int n = options.left + options.right;
  Rng rng = make_rng(seed, 0xb13);
  std::bernoulli_distribution coin(options.arc_probability);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    std::vector<Arc> arcs;
    for (Vertex l = 0; l < options.left; ++l) {
      for (Vertex r = options.left; r < n; ++r) {
        if (coin(rng)) arcs.emplace_back(l, r);
        if (coin(rng)) arcs.emplace_back(r, l);
      }
    }
    Digraph d(n, arcs);
    auto diam = directed_diameter(d, Execution::Serial);
    if (diam && *diam <= 3) return d;
  }
  throw BudgetExceeded("no bipartite diameter-3 digraph after " + std::to_string(options.retries) + " samples");
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (spec.family.empty()) throw PreconditionError("empty generator family");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw PreconditionError("generator parameter '" + std::string(item) + "' is not key=value");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

namespace {

class Params {
 public:
  explicit Params(const GeneratorSpec& spec) : spec_(spec) {}

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
    used_.insert(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      if (!fallback) throw PreconditionError("generator '" + spec_.family + "' needs parameter " + key);
      return *fallback;
    }
    try {
      std::size_t used = 0;
      int value = std::stoi(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return value;
    } catch (const std::exception&) {
      throw PreconditionError("parameter " + key + " is not an integer: " + it->second);
    }
  }

  double real(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    try {
      std::size_t used = 0;
      double value = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return value;
    } catch (const std::exception&) {
      throw PreconditionError("parameter " + key + " is not a number: " + it->second);
    }
  }

  void finish() const {
    for (const auto& [key, value] : spec_.params) {
      if (!used_.count(key)) throw PreconditionError("generator '" + spec_.family + "' has no parameter " + key);
    }
  }

 private:
  const GeneratorSpec& spec_;
  std::set<std::string> used_;
};

}  // namespace

AnyGraph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  Params p(spec);
  const std::string& f = spec.family;
  AnyGraph out;
  if (f == "path") {
    out = path_graph(p.integer("n"));
  } else if (f == "cycle") {
    out = cycle_graph(p.integer("n"));
  } else if (f == "complete") {
    out = complete_graph(p.integer("n"));
  } else if (f == "star") {
    out = star_graph(p.integer("n"));
  } else if (f == "tree") {
    out = random_tree(p.integer("n"), seed);
  } else if (f == "petersen") {
    out = petersen_graph();
  } else if (f == "heawood") {
    out = heawood_graph();
  } else if (f == "mcgee") {
    out = mcgee_graph();
  } else if (f == "random-with-diameter-bound" || f == "random-diam") {
    RandomGraphOptions o;
    o.n = p.integer("n");
    o.max_diameter = p.integer("d", 4);
    o.min_diameter = p.integer("min_d", 1);
    o.edge_probability = p.real("p", -1);
    o.retries = p.integer("retries", o.retries);
    out = random_graph_with_diameter(o, seed);
  } else if (f == "random-diam2-digraph" || f == "random-diam2") {
    RandomDigraphOptions o;
    o.n = p.integer("n");
    o.arc_probability = p.real("p", o.arc_probability);
    o.oriented = p.integer("oriented", 0) != 0;
    o.retries = p.integer("retries", o.retries);
    out = random_diam2_digraph(o, seed);
  } else if (f == "random-bipartite-diam3-digraph" || f == "random-bipartite-diam3") {
    RandomBipartiteDigraphOptions o;
    o.left = p.integer("left", 4);
    o.right = p.integer("right", 4);
    o.arc_probability = p.real("p", o.arc_probability);
    o.retries = p.integer("retries", o.retries);
    out = random_bipartite_diam3_digraph(o, seed);
  } else if (f == "directed-cycle") {
    out = directed_cycle(p.integer("n"));
  } else if (f == "complete-digraph") {
    out = bidirected_complete(p.integer("n"));
  } else {
    throw PreconditionError("unknown generator family '" + f + "'");
  }
  p.finish();
  return out;
}

}  // namespace copsrobbers
