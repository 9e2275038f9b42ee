#include "sigdom/generators.hpp"

#include <vector>

namespace sigdom {

namespace {

void require_at_least(const char* family, int value, int minimum) {
  if (value < minimum)
    throw PreconditionError(std::string(family) + " needs parameter >= " +
                            std::to_string(minimum) + ", got " + std::to_string(value));
}

}  // namespace

Graph complete_graph(int n) {
  require_at_least("complete", n, 2);
  std::vector<Graph::Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require_at_least("cycle", n, 3);
  std::vector<Graph::Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require_at_least("path", n, 2);
  std::vector<Graph::Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
  require_at_least("complete_bipartite", m, 1);
  require_at_least("complete_bipartite", n, 1);
  std::vector<Graph::Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

Graph star_graph(int n) {
  require_at_least("star", n, 2);
  std::vector<Graph::Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

Graph generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.a);
    case Family::cycle: return cycle_graph(spec.a);
    case Family::path: return path_graph(spec.a);
    case Family::complete_bipartite: return complete_bipartite_graph(spec.a, spec.b);
    case Family::star: return star_graph(spec.a);
  }
  throw PreconditionError("unknown family");
}

std::string describe(const FamilySpec& spec) {
  const std::string a = std::to_string(spec.a);
  switch (spec.family) {
    case Family::complete: return "K_" + a;
    case Family::cycle: return "C_" + a;
    case Family::path: return "P_" + a;
    case Family::complete_bipartite: return "K_{" + a + "," + std::to_string(spec.b) + "}";
    case Family::star: return "K_{1," + std::to_string(spec.a - 1) + "}";
  }
  return "?";
}

}  // namespace sigdom
