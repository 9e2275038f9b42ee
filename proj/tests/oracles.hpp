#pragma once

// Exhaustive reference computations for tests. Everything here works from
// Graph::adjacent alone and enumerates all labellings or subsets; none of it
// shares code with the branch-and-bound solvers.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigdom/graph.hpp"
#include "sigdom/graph_io.hpp"

namespace oracle {

using sigdom::Graph;
using sigdom::Vertex;

struct SignedOptimum {
  std::optional<int> value;  // nullopt when nothing is feasible
  std::size_t optimal_count = 0;
};

/// Brute force over all 2^n labellings. Bit v of the loop mask set means
/// f(v) = -1. `at_most` selects f(N(v)) <= bound, else f(N(v)) >= bound.
inline SignedOptimum brute_signed(const Graph& g, bool at_most, int bound, bool maximize) {
  const int n = g.order();
  SignedOptimum best;
  for (std::uint64_t minus = 0; minus < (std::uint64_t{1} << n); ++minus) {
    auto f = [&](Vertex v) { return (minus >> v) & 1 ? -1 : 1; };
    bool feasible = true;
    for (Vertex v = 0; v < n && feasible; ++v) {
      int sum = 0;
      for (Vertex u = 0; u < n; ++u)
        if (u != v && g.adjacent(u, v)) sum += f(u);
      feasible = at_most ? sum <= bound : sum >= bound;
    }
    if (!feasible) continue;
    int weight = 0;
    for (Vertex v = 0; v < n; ++v) weight += f(v);
    if (!best.value || (maximize ? weight > *best.value : weight < *best.value)) {
      best.value = weight;
      best.optimal_count = 1;
    } else if (weight == *best.value) {
      ++best.optimal_count;
    }
  }
  return best;
}

inline SignedOptimum brute_istdn(const Graph& g) { return brute_signed(g, true, 0, true); }
inline SignedOptimum brute_stdn(const Graph& g) { return brute_signed(g, false, 1, false); }
inline SignedOptimum brute_st2in(const Graph& g) { return brute_signed(g, true, 1, true); }

/// Smallest |D| with |N(v) ∩ D| >= k for all v, by scanning every subset.
inline std::optional<int> brute_ktuple(const Graph& g, int k) {
  const int n = g.order();
  std::optional<int> best;
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
    const int size = __builtin_popcountll(d);
    if (best && size >= *best) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      int count = 0;
      for (Vertex u = 0; u < n; ++u)
        if ((d >> u) & 1 && g.adjacent(u, v)) ++count;
      ok = count >= k;
    }
    if (ok) best = size;
  }
  return best;
}

inline int brute_clique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u)
      for (Vertex v = u + 1; v < n && clique; ++v)
        if ((s >> u) & 1 && (s >> v) & 1 && !g.adjacent(u, v)) clique = false;
    if (clique) best = size;
  }
  return best;
}

/// G(n, p) conditioned on being connected (rejection sampling).
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Graph::Edge> edges;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g(n, edges);
    if (sigdom::is_connected(g)) return g;
  }
}

/// Published counts of unlabelled free trees on n = 1..16 vertices.
inline constexpr int kFreeTreeCensus[] = {1,  1,   1,   2,   3,    6,    11,   23,
                                          47, 106, 235, 551, 1301, 3159, 7741, 19320};

/// AHU canonical string of a tree, rooted at its centre(s); equal strings iff
/// isomorphic.
inline std::string tree_canonical_form(const Graph& t) {
  const int n = t.order();
  if (n <= 2) return std::to_string(n);
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex u = 0; u < n; ++u)
        if (t.adjacent(leaf, u) && --degree[u] == 1) next.push_back(u);
    layer = next;
  }
  std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex u = 0; u < n; ++u)
      if (u != parent && t.adjacent(v, u)) kids.push_back(encode(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::vector<std::string> forms;
  for (Vertex c : layer) forms.push_back(encode(c, -1));
  if (forms.size() == 2) {
    // Bicentral: root at the central edge.
    const std::string a = encode(layer[0], layer[1]), b = encode(layer[1], layer[0]);
    return a < b ? a + b : b + a;
  }
  return forms[0];
}

inline std::vector<Graph> read_corpus(const std::string& name) {
  std::ifstream in(std::string(SIGDOM_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  return sigdom::GraphStream::from_istream(in, sigdom::GraphFormat::graph6).collect();
}

}  // namespace oracle
