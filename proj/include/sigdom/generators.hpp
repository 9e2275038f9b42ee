#pragma once

#include <string>

#include "sigdom/graph.hpp"

namespace sigdom {

// Canonical numbering:
//   complete n:             0..n-1
//   cycle n:                0..n-1 in cyclic order, edges {i, i+1 mod n}
//   path n:                 0..n-1 in path order
//   complete_bipartite m n: left block 0..m-1, right block m..m+n-1
//   star n:                 K_{1,n-1} with centre 0, leaves 1..n-1

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int n);

enum class Family { complete, cycle, path, complete_bipartite, star };

struct FamilySpec {
  Family family;
  int a = 0;
  int b = 0;  // second block size, complete_bipartite only
};

/// Dispatches to the generator for `spec`; every family requires min degree
/// at least 1, so parameters below the minimum raise PreconditionError.
Graph generate_family(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

}  // namespace sigdom
