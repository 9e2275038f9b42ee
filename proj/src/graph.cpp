#include "sigdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sigdom {

VertexSet::VertexSet(int universe, VertexMask members) : universe_(universe), mask_(members) {
  if (universe < 0 || universe > kMaxVertices)
    throw PreconditionError("vertex set universe out of range: " + std::to_string(universe));
  if (members & ~full_mask(universe))
    throw PreconditionError("vertex set member outside 0.." + std::to_string(universe - 1));
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_)
    throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(universe_ - 1));
  mask_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  if (v >= 0 && v < universe_) mask_ &= ~bit(v);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each_vertex(mask_, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("graph order must be in 0.." + std::to_string(kMaxVertices));
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) +
                              ": vertex index out of range for n=" + std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (adj_[u] & bit(v))
      throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++m_;
  }
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for_each_vertex(adj_[u] & ~full_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

int min_degree(const Graph& g) {
  int d = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return g.order() == 0 ? 0 : d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::optional<int> regularity(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = min_degree(g);
  if (d != max_degree(g)) return std::nullopt;
  return d;
}

int edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw PreconditionError("vertex set does not belong to this graph");
  if (a.mask() & b.mask()) throw PreconditionError("edges_between requires disjoint sets");
  int count = 0;
  for_each_vertex(a.mask(), [&](Vertex v) { count += popcount(g.neighbors(v) & b.mask()); });
  return count;
}

int edges_inside(const Graph& g, VertexMask set) {
  int twice = 0;
  for_each_vertex(set, [&](Vertex v) { twice += popcount(g.neighbors(v) & set); });
  return twice / 2;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexMask seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      bool ok = true;
      for_each_vertex(g.neighbors(v), [&](Vertex u) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closing at depths d(u), d(v)
  // bounds a cycle through the root of length d(u) + d(v) + 1.
  std::optional<int> best;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> depth(g.order(), -1), parent(g.order(), -1);
    depth[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for_each_vertex(g.neighbors(v), [&](Vertex u) {
        if (depth[u] == -1) {
          depth[u] = depth[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (parent[v] != u) {
          const int len = depth[u] + depth[v] + 1;
          if (!best || len < *best) best = len;
        }
      });
    }
  }
  return best;
}

Graph induced_subgraph(const Graph& g, VertexMask members) {
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for_each_vertex(members, [&](Vertex v) { index[v] = k++; });
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph(k, edges);
}

void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw PreconditionError("isolated vertex " + std::to_string(v));
  if (g.order() == 0) throw PreconditionError("empty graph");
}

}  // namespace sigdom
