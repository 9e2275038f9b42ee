#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigdom {

using Vertex = int;

/// Bit v is set iff vertex v is a member. All graphs fit in one word.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Raised when an argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline constexpr VertexMask full_mask(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Calls fn(v) for every set bit, in increasing order.
template <class Fn>
void for_each_vertex(VertexMask m, Fn&& fn) {
  while (m) {
    const Vertex v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

/// A subset of {0..n-1}, tied to the order n of the graph it lives in.
class VertexSet {
 public:
  explicit VertexSet(int universe, VertexMask members = 0);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  int universe() const { return universe_; }
  VertexMask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(Vertex v) const { return v >= 0 && v < universe_ && (mask_ & bit(v)); }

  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;
  VertexSet complement() const { return VertexSet(universe_, ~mask_ & full_mask(universe_)); }

  bool operator==(const VertexSet&) const = default;

 private:
  int universe_;
  VertexMask mask_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one bitmask per vertex, so neighborhood intersections and
/// counts are a single AND plus popcount.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;

  /// Throws PreconditionError on an out-of-range endpoint, a self-loop, or a
  /// repeated edge (in either orientation).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u] & bit(v); }
  VertexMask vertices() const { return full_mask(order()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexMask> adj_;
  int m_ = 0;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// r when every vertex has degree r. The empty graph is not regular.
std::optional<int> regularity(const Graph& g);

/// |[A,B]|, the number of edges with one end in A and the other in B.
/// A and B must be disjoint subsets of the same graph.
int edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Number of edges with both ends in the set.
int edges_inside(const Graph& g, VertexMask set);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Subgraph induced by `members`, relabelled 0..k-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask members);

/// Throws PreconditionError("isolated vertex") when min degree is 0.
void require_no_isolated(const Graph& g);

}  // namespace sigdom
