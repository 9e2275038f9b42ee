#include <doctest.h>

#include "sigdom/generators.hpp"

using namespace sigdom;

TEST_CASE("family sizes") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph c5 = cycle_graph(5);
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(regularity(c5) == 2);

  const Graph k23 = complete_bipartite_graph(2, 3);
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);
}

TEST_CASE("canonical numbering") {
  const Graph c5 = cycle_graph(5);
  for (Vertex i = 0; i < 5; ++i) CHECK(c5.adjacent(i, (i + 1) % 5));

  const Graph p4 = path_graph(4);
  CHECK(p4.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}, {2, 3}});

  const Graph k23 = complete_bipartite_graph(2, 3);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(1, 2));
  CHECK_FALSE(k23.adjacent(2, 4));

  const Graph star = star_graph(5);
  CHECK(star.degree(0) == 4);
  for (Vertex v = 1; v < 5; ++v) CHECK(star.degree(v) == 1);
}

TEST_CASE("every family member has minimum degree at least 1") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(min_degree(complete_graph(n)) == n - 1);
    CHECK(min_degree(path_graph(n)) == 1);
    CHECK(min_degree(star_graph(n)) == 1);
    if (n >= 3) CHECK(regularity(cycle_graph(n)) == 2);
  }
}

TEST_CASE("parameters below the family minimum are rejected") {
  CHECK_THROWS_AS(complete_graph(1), PreconditionError);
  CHECK_THROWS_AS(cycle_graph(2), PreconditionError);
  CHECK_THROWS_AS(path_graph(1), PreconditionError);
  CHECK_THROWS_AS(complete_bipartite_graph(0, 3), PreconditionError);
  CHECK_THROWS_AS(star_graph(1), PreconditionError);
}

TEST_CASE("generate_family dispatch") {
  CHECK(generate_family({Family::cycle, 6}) == cycle_graph(6));
  CHECK(generate_family({Family::complete_bipartite, 3, 4}) == complete_bipartite_graph(3, 4));
  CHECK(describe({Family::complete_bipartite, 3, 4}).find('3') != std::string::npos);
}
