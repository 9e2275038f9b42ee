#pragma once

#include "sigdom/graph.hpp"

namespace sigdom {

/// A maximum clique, found by branch-and-bound with a greedy colouring
/// upper bound on the candidate set.
VertexSet maximum_clique(const Graph& g);

int clique_number(const Graph& g);

}  // namespace sigdom
