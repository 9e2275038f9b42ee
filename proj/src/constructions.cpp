#include "sigdom/constructions.hpp"

#include <bit>
#include <optional>

namespace sigdom {

TreeStructure tree_structure(const Graph& t) {
  if (t.order() < 2 || !is_tree(t))
    throw PreconditionError("tree_structure needs a tree on at least 2 vertices");
  const int n = t.order();
  VertexMask leaf_mask = 0, support_mask = 0;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      leaf_mask |= bit(v);
      support_mask |= t.neighbors(v);
    }
  const VertexSet leaves(n, leaf_mask), supports(n, support_mask);

  TreeStructure ts{t, leaves, supports, supports.members(), {}, induced_subgraph(t, supports.mask())};
  for (Vertex s : ts.support_list) ts.leaf_groups.emplace_back(n, t.neighbors(s) & leaves.mask());
  return ts;
}

int tree_lower_bound(const TreeStructure& ts) {
  int half_leaves = 0;
  for (std::size_t i = 0; i < ts.support_list.size(); ++i) half_leaves += ts.leaf_count(i) / 2;
  return -ts.order() + 2 * half_leaves;
}

OmegaVerdict omega_membership(const TreeStructure& ts) {
  const Graph& t = ts.tree;
  const int n = t.order();
  if (n == 2) return {true, "a", "P_2"};

  for (std::size_t i = 0; i < ts.support_list.size(); ++i)
    if (ts.leaf_count(i) < 2)
      return {false, "a",
              "support " + std::to_string(ts.support_list[i]) + " has " +
                  std::to_string(ts.leaf_count(i)) + " leaf"};

  const int support_degree = ts.support_graph_max_degree();
  if (support_degree > 1)
    return {false, "b", "support graph has maximum degree " + std::to_string(support_degree)};

  auto first_odd_group = [&]() -> std::optional<Vertex> {
    for (std::size_t i = 0; i < ts.support_list.size(); ++i)
      if (ts.leaf_count(i) % 2 != 0) return ts.support_list[i];
    return std::nullopt;
  };
  const VertexMask inner = t.vertices() & ~(ts.leaves.mask() | ts.supports.mask());

  if (support_degree == 1) {
    if (inner)
      return {false, "b1",
              "vertex " + std::to_string(std::countr_zero(inner)) + " is neither leaf nor support"};
    if (auto odd = first_odd_group())
      return {false, "b1", "support " + std::to_string(*odd) + " has an odd leaf group"};
    return {true, "b1", ""};
  }

  if (max_degree(t) == n - 1) return {true, "b2", "star"};
  for (Vertex s : ts.support_list) {
    const int outside = popcount(t.neighbors(s) & inner);
    if (outside != 1)
      return {false, "b2",
              "support " + std::to_string(s) + " has " + std::to_string(outside) +
                  " neighbours outside L and S"};
  }
  for (Vertex v = 0; v < n; ++v)
    if ((inner & bit(v)) && !(t.neighbors(v) & ts.supports.mask()))
      return {false, "b2", "vertex " + std::to_string(v) + " has no support neighbour"};
  if (auto odd = first_odd_group())
    return {false, "b2", "support " + std::to_string(*odd) + " has an odd leaf group"};
  return {true, "b2", ""};
}

SignedFunction HGraph::extremal_labeling() const {
  VertexMask minus = 0;
  for (const auto& x : x_blocks) minus |= x.mask();
  return SignedFunction::from_minus_set(graph, VertexSet(graph.order(), minus));
}

HGraph build_h_graph(int r) {
  if (r < 2) throw PreconditionError("H(r) needs r >= 2, got " + std::to_string(r));
  const int x_size = r - 1;
  const int y_size = (r - 1) * (r - 1);
  const int block = x_size + y_size;
  const int n = r * block;
  if (n > kMaxVertices) throw PreconditionError("H(r) order exceeds " + std::to_string(kMaxVertices));

  auto x = [&](int i, int t) { return i * block + t; };
  auto y = [&](int i, int t) { return i * block + x_size + t; };

  std::vector<Graph::Edge> edges;
  for (int i = 0; i < r; ++i) {
    for (int a = 0; a < x_size; ++a)
      for (int b = 0; b < y_size; ++b) edges.emplace_back(x(i, a), y(i, b));
    for (int j = i + 1; j < r; ++j) {
      for (int a = 0; a < x_size; ++a)
        for (int b = 0; b < x_size; ++b) edges.emplace_back(x(i, a), x(j, b));
      for (int t = 0; t < y_size; ++t) edges.emplace_back(y(i, t), y(j, t));
    }
  }

  HGraph h{r, Graph(n, edges), {}, {}, {}};
  for (int i = 0; i < r; ++i) {
    VertexSet xs(n), ys(n);
    for (int a = 0; a < x_size; ++a) xs.insert(x(i, a));
    for (int t = 0; t < y_size; ++t) ys.insert(y(i, t));
    h.x_blocks.push_back(xs);
    h.y_blocks.push_back(ys);
  }
  for (int i = 0; i < r; ++i)
    h.parts.emplace_back(n, h.x_blocks[i].mask() | h.y_blocks[(i + 1) % r].mask());
  return h;
}

Graph build_heawood() {
  std::vector<Graph::Edge> edges;
  for (Vertex i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (Vertex i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph(14, edges);
}

bool is_heawood(const Graph& g) {
  return g.order() == 14 && regularity(g) == 3 && is_bipartite(g) && girth(g) == 6;
}

Graph build_weight_tree(int k) {
  const int order = k >= 0 ? 3 * k + 4 : 9 * -k;
  if (order > kMaxWeightTreeOrder)
    throw PreconditionError("weight-" + std::to_string(k) + " tree has order " +
                            std::to_string(order) + " above cap " +
                            std::to_string(kMaxWeightTreeOrder));
  std::vector<Graph::Edge> edges;
  if (k >= 0) {
    const int path = k + 4;
    for (Vertex v = 0; v + 1 < path; ++v) edges.emplace_back(v, v + 1);
    Vertex next = path;
    for (Vertex v = 2; v <= k + 1; ++v) {
      edges.emplace_back(v, next++);
      edges.emplace_back(v, next++);
    }
    return Graph(order, edges);
  }
  const int copies = -k;
  for (int i = 0; i < copies; ++i) {
    const Vertex base = 9 * i;
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
    for (int j = 0; j < 3; ++j) {
      edges.emplace_back(base + j, base + 3 + 2 * j);
      edges.emplace_back(base + j, base + 4 + 2 * j);
    }
    if (i + 1 < copies) edges.emplace_back(base + 1, base + 10);
  }
  return Graph(order, edges);
}

SignedFunction weight_tree_labeling(int k) {
  const Graph t = build_weight_tree(k);
  if (k >= 0) return SignedFunction::from_minus_set(t, tree_structure(t).supports);
  VertexSet minus(t.order());
  for (int i = 0; i < -k; ++i) {
    const Vertex base = 9 * i;
    for (Vertex v : {base, base + 1, base + 2, base + 4, base + 8}) minus.insert(v);
  }
  return SignedFunction::from_minus_set(t, minus);
}

int complete_graph_istdn(int n) {
  if (n < 2) throw PreconditionError("complete graph needs n >= 2");
  return n % 2 == 0 ? -2 : -1;
}

int cycle_istdn(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  constexpr int by_residue[] = {0, -1, -2, -1};
  return by_residue[n % 4];
}

int complete_bipartite_istdn(int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("complete bipartite graph needs m, n >= 1");
  return -(m % 2) - (n % 2);
}

int h_graph_istdn(int r) {
  if (r < 2) throw PreconditionError("H(r) needs r >= 2");
  return r * (r - 1) * (r - 1) - r * (r - 1);
}

}  // namespace sigdom
