#include "sigdom/trees.hpp"

#include <algorithm>
#include <memory>

namespace sigdom {

namespace {

using Layout = std::vector<int>;

// Successor of a rooted-tree level sequence, changing positions >= p.
std::optional<Layout> next_rooted(const Layout& pred, std::optional<std::size_t> p_hint = {}) {
  std::size_t p;
  if (p_hint) {
    p = *p_hint;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits a layout into the leftmost subtree of the root (levels shifted down
// by one) and the remainder rooted at level 0.
std::pair<Layout, Layout> split(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Graph::Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Graph(static_cast<int>(layout.size()), edges);
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw PreconditionError("tree enumeration supports 1 <= n <= " +
                            std::to_string(kMaxTreeOrder) + ", got " + std::to_string(n));
  if (n >= 3) {
    // Initial path-like layout: 0,1,..,n/2, then 1,..,(n+1)/2 - 1.
    Layout start;
    for (int i = 0; i <= n / 2; ++i) start.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
    layout_ = start;
  }
}

std::optional<Layout> FreeTreeEnumerator::next_free(Layout candidate) const {
  auto [left, rest] = split(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto successor = next_rooted(candidate, p);
  if (!successor) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split(*successor);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < len; ++i)
      (*successor)[successor->size() - len + i] = static_cast<int>(i) + 1;
  }
  return successor;
}

std::optional<Graph> FreeTreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return n_ == 1 ? Graph(1, {}) : Graph(2, {{0, 1}});
  }
  if (!layout_) {
    done_ = true;
    return std::nullopt;
  }
  layout_ = next_free(*layout_);
  if (!layout_) {
    done_ = true;
    return std::nullopt;
  }
  Graph tree = layout_to_graph(*layout_);
  layout_ = next_rooted(*layout_);
  return tree;
}

GraphStream enumerate_trees(int n) {
  auto gen = std::make_shared<FreeTreeEnumerator>(n);
  return GraphStream([gen] { return gen->next(); });
}

std::vector<Graph> trees_of_order(int n) { return enumerate_trees(n).collect(); }

GraphStream enumerate_trees_range(int lo, int hi) {
  std::vector<GraphStream> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(enumerate_trees(n));
  return GraphStream::chain(std::move(parts));
}

}  // namespace sigdom
