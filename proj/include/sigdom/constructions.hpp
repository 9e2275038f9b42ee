#pragma once

#include <string>
#include <vector>

#include "sigdom/graph.hpp"
#include "sigdom/solvers.hpp"

namespace sigdom {

/// Leaves, support vertices and leaf groups of a tree.
struct TreeStructure {
  Graph tree;
  VertexSet leaves;
  VertexSet supports;
  /// Support vertices v_1..v_s in increasing index order.
  std::vector<Vertex> support_list;
  /// leaf_groups[i] holds the leaves adjacent to support_list[i].
  std::vector<VertexSet> leaf_groups;
  /// Subgraph induced on the supports, relabelled in support_list order.
  Graph support_graph;

  int order() const { return tree.order(); }
  int leaf_count(std::size_t i) const { return leaf_groups[i].size(); }
  int support_graph_max_degree() const { return max_degree(support_graph); }
};

/// Throws PreconditionError unless `t` is a tree with at least 2 vertices.
TreeStructure tree_structure(const Graph& t);

/// -n + 2 * sum_i floor(l_i / 2), l_i the leaf count of the i-th support.
int tree_lower_bound(const TreeStructure& ts);

struct OmegaVerdict {
  bool member;
  /// Label of the first failing condition ("a", "b", "b1", "b2"), or the
  /// condition that admitted the tree.
  std::string clause;
  std::string detail;
};

/// Recognises the family of trees for which tree_lower_bound is attained:
///   (a)  every support vertex has at least two leaves, or T is P_2;
///   (b)  the support graph has maximum degree at most 1;
///   (b1) if it has an edge: every vertex is a leaf or support, and every
///        leaf group has even size;
///   (b2) if it has no edge: T is a star, or every support has exactly one
///        neighbour outside L ∪ S, every vertex outside L ∪ S has a support
///        neighbour, and every leaf group has even size.
OmegaVerdict omega_membership(const TreeStructure& ts);

/// The r-partite extremal graph for the clique-free upper bound.
///
/// Vertex layout: block i (0-based) occupies [i r(r-1), (i+1) r(r-1)), with
/// X_i (r-1 vertices) first and Y_i ((r-1)^2 vertices) after it.
struct HGraph {
  int r;
  Graph graph;
  std::vector<VertexSet> x_blocks;
  std::vector<VertexSet> y_blocks;
  /// Colour classes Z_i = X_i ∪ Y_{i+1 mod r}.
  std::vector<VertexSet> parts;

  /// -1 on every X block, +1 on every Y block.
  SignedFunction extremal_labeling() const;
};

/// X_i–Y_i complete bipartite, X_i joined to every X_j (j != i), and Y_i[t]
/// matched to Y_j[t] for every pair i < j. Requires r >= 2.
HGraph build_h_graph(int r);

/// The Heawood graph: the 14-cycle plus chords {i, i+5} for even i.
Graph build_heawood();

/// True iff g is cubic, bipartite, of girth 6 on 14 vertices, which
/// characterises the Heawood graph.
bool is_heawood(const Graph& g);

inline constexpr int kMaxWeightTreeOrder = 40;

/// A tree whose maximum ISTDF weight is exactly k.
///   k = 0:  the path 0-1-2-3.
///   k >= 1: path 0..k+3 with two pendant leaves on each of 2..k+1; order 3k+4.
///   k <= -1: |k| copies of a 9-vertex spider (path a-b-c with two leaves on
///            each of a, b, c), centres b joined in a path; order 9|k|.
///            Copy i uses vertices 9i.. as a, b, c, then leaves a1 a2 b1 b2 c1 c2.
/// Throws PreconditionError when the order would exceed 40.
Graph build_weight_tree(int k);

/// The maximum ISTDF of build_weight_tree(k) that comes with the
/// construction: for k >= 0, -1 exactly on the support vertices; for k < 0,
/// -1 on every spider path vertex and on leaves a2 and c2 of each copy.
SignedFunction weight_tree_labeling(int k);

// Closed-form maximum ISTDF weights of the standard families.

/// -2 for even n, -1 for odd n (n >= 2).
int complete_graph_istdn(int n);
/// 0, -1, -2, -1 for n = 0, 1, 2, 3 (mod 4) (n >= 3).
int cycle_istdn(int n);
/// 0 if m, n both even, -2 if both odd, -1 otherwise.
int complete_bipartite_istdn(int m, int n);
/// r(r-1)^2 - r(r-1), attained by HGraph::extremal_labeling.
int h_graph_istdn(int r);

}  // namespace sigdom
