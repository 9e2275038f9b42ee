#pragma once

#include <optional>
#include <vector>

#include "sigdom/graph.hpp"
#include "sigdom/graph_io.hpp"

namespace sigdom {

inline constexpr int kMaxTreeOrder = 16;

/// Generates one representative of every isomorphism class of free trees on
/// n vertices, in constant amortized time per tree.
///
/// Trees are walked as canonical level sequences of rooted trees (root at a
/// centre), skipping sequences whose primary subtree is not the largest one
/// under the ordering that makes the representative unique.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n);

  std::optional<Graph> next();

 private:
  std::optional<std::vector<int>> next_free(std::vector<int> candidate) const;

  int n_;
  bool done_ = false;
  int small_emitted_ = 0;
  std::optional<std::vector<int>> layout_;
};

/// Streams all free trees of order n, 1 <= n <= 16.
GraphStream enumerate_trees(int n);

std::vector<Graph> trees_of_order(int n);

/// Free trees of orders lo..hi concatenated in increasing order.
GraphStream enumerate_trees_range(int lo, int hi);

}  // namespace sigdom
