#include "sigdom/clique.hpp"

#include <vector>

namespace sigdom {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexMask run() {
    expand(0, g_.vertices());
    return best_;
  }

 private:
  // Greedy sequential colouring of `candidates`; returns vertices in colour
  // order with the colour number of each, so colour[i] bounds the clique
  // size achievable from order[0..i].
  void colour(VertexMask candidates, std::vector<Vertex>& order, std::vector<int>& colours) const {
    int c = 0;
    VertexMask uncoloured = candidates;
    while (uncoloured) {
      ++c;
      VertexMask available = uncoloured;
      while (available) {
        const Vertex v = std::countr_zero(available);
        available &= ~g_.neighbors(v) & ~bit(v);
        uncoloured &= ~bit(v);
        order.push_back(v);
        colours.push_back(c);
      }
    }
  }

  void expand(VertexMask clique, VertexMask candidates) {
    std::vector<Vertex> order;
    std::vector<int> colours;
    colour(candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (popcount(clique) + colours[i] <= popcount(best_)) return;
      const Vertex v = order[i];
      const VertexMask grown = clique | bit(v);
      const VertexMask next = candidates & g_.neighbors(v);
      if (next == 0) {
        if (popcount(grown) > popcount(best_)) best_ = grown;
      } else {
        expand(grown, next);
      }
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  VertexMask best_ = 0;
};

}  // namespace

VertexSet maximum_clique(const Graph& g) { return VertexSet(g.order(), CliqueSearch(g).run()); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

}  // namespace sigdom
