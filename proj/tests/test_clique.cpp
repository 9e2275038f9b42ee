#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigdom/clique.hpp"
#include "sigdom/constructions.hpp"
#include "sigdom/generators.hpp"

using namespace sigdom;

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex u : s.members())
    for (Vertex v : s.members())
      if (u != v && !g.adjacent(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("clique numbers of standard graphs") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(cycle_graph(3)) == 3);
  CHECK(clique_number(complete_bipartite_graph(4, 4)) == 2);
  CHECK(clique_number(build_h_graph(3).graph) == 3);
  CHECK(clique_number(Graph(0, {})) == 0);
  CHECK(clique_number(Graph(3, {})) == 1);
}

TEST_CASE("maximum clique agrees with exhaustive search on the corpus") {
  for (const Graph& g : oracle::read_corpus("connected_2_to_8.g6")) {
    const VertexSet c = maximum_clique(g);
    REQUIRE(is_clique(g, c));
    REQUIRE(c.size() == oracle::brute_clique(g));
  }
}

TEST_CASE("maximum clique agrees with exhaustive search on random graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_connected_graph(rng, n, 0.3 + 0.1 * (trial % 5));
    const VertexSet c = maximum_clique(g);
    REQUIRE(is_clique(g, c));
    REQUIRE(c.size() == oracle::brute_clique(g));
  }
}
