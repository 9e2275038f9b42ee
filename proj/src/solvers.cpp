#include "sigdom/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sigdom {

namespace {

int cap_from_env(int fallback) {
  const char* env = std::getenv("SIGDOM_NODE_CAP");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) return fallback;
  return static_cast<int>(std::min<long>(value, kMaxVertices));
}

void require_order_at_most(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw PreconditionError(std::string(what) + ": n=" + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(cap) +
                            " (override with SIGDOM_NODE_CAP)");
}

std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Depth-first search over ±1 labellings. Scores are weights oriented so that
// larger is better (weight for maximisation, -weight for minimisation).
class SignedSearch {
 public:
  SignedSearch(const Graph& g, const SignedProblem& p)
      : g_(g),
        p_(p),
        n_(g.order()),
        objective_sign_(p.direction() == Direction::maximize ? 1 : -1),
        order_(branching_order(g)),
        label_(n_, 0),
        labeled_sum_(n_, 0),
        unlabeled_(n_) {
    for (Vertex v = 0; v < n_; ++v) unlabeled_[v] = g.degree(v);
  }

  /// Best labelling, seeded with the constant labelling that is always
  /// feasible for p.
  SignedResult best() {
    const int seed_sign = p_.relation() == Relation::at_most ? -1 : 1;
    best_labels_.assign(n_, seed_sign);
    best_score_ = objective_sign_ * seed_sign * n_;
    collect_all_ = false;
    run();
    SignedFunction witness(g_, best_labels_);
    return {witness.weight(), std::move(witness), nodes_};
  }

  /// Every feasible labelling with weight exactly `weight`, assuming no
  /// feasible labelling scores higher.
  std::vector<SignedFunction> all_with_weight(int weight) {
    best_score_ = objective_sign_ * weight;
    collect_all_ = true;
    run();
    return std::move(found_);
  }

 private:
  void run() {
    for (Vertex v = 0; v < n_; ++v)
      if (hopeless(v)) return;
    search(0);
  }

  bool hopeless(Vertex u) const {
    const int b = p_.bound();
    return p_.relation() == Relation::at_most ? labeled_sum_[u] - unlabeled_[u] > b
                                              : labeled_sum_[u] + unlabeled_[u] < b;
  }

  // Applies label x to v; reports whether every touched neighbourhood can
  // still be repaired. The update is applied in full either way.
  bool assign(Vertex v, int x) {
    label_[v] = x;
    score_ += objective_sign_ * x;
    bool ok = true;
    for_each_vertex(g_.neighbors(v), [&](Vertex u) {
      labeled_sum_[u] += x;
      --unlabeled_[u];
      if (hopeless(u)) ok = false;
    });
    return ok;
  }

  void unassign(Vertex v, int x) {
    label_[v] = 0;
    score_ -= objective_sign_ * x;
    for_each_vertex(g_.neighbors(v), [&](Vertex u) {
      labeled_sum_[u] -= x;
      ++unlabeled_[u];
    });
  }

  void search(int depth) {
    ++nodes_;
    if (depth == n_) {
      if (collect_all_) {
        if (score_ == best_score_) found_.emplace_back(g_, label_);
      } else if (score_ > best_score_) {
        best_score_ = score_;
        best_labels_ = label_;
      }
      return;
    }
    const int optimistic = score_ + (n_ - depth);
    if (collect_all_ ? optimistic < best_score_ : optimistic <= best_score_) return;

    const Vertex v = order_[depth];
    for (int x : {objective_sign_, -objective_sign_}) {
      if (assign(v, x)) search(depth + 1);
      unassign(v, x);
    }
  }

  const Graph& g_;
  const SignedProblem p_;
  const int n_;
  const int objective_sign_;
  const std::vector<Vertex> order_;
  std::vector<int> label_;
  std::vector<int> labeled_sum_;
  std::vector<int> unlabeled_;
  int score_ = 0;
  int best_score_ = 0;
  std::vector<int> best_labels_;
  bool collect_all_ = false;
  std::vector<SignedFunction> found_;
  std::uint64_t nodes_ = 0;
};

class TupleSearch {
 public:
  TupleSearch(const Graph& g, int k, int lower_bound)
      : g_(g),
        n_(g.order()),
        k_(k),
        max_degree_(max_degree(g)),
        lower_bound_(lower_bound),
        order_(branching_order(g)),
        cover_(n_, 0),
        available_(n_) {
    for (Vertex v = 0; v < n_; ++v) available_[v] = g.degree(v);
    total_need_ = k * n_;
    best_ = g.vertices();
  }

  SetResult run() {
    if (popcount(best_) > lower_bound_) search(0);
    return {popcount(best_), VertexSet(n_, best_), nodes_};
  }

 private:
  int need(Vertex v) const { return std::max(0, k_ - cover_[v]); }

  void search(int depth) {
    ++nodes_;
    if (total_need_ == 0) {
      if (popcount(chosen_) < popcount(best_)) {
        best_ = chosen_;
        if (popcount(best_) <= lower_bound_) done_ = true;
      }
      return;
    }
    if (depth == n_) return;

    int max_need = 0;
    for (Vertex v = 0; v < n_; ++v) max_need = std::max(max_need, need(v));
    const int counting = (total_need_ + max_degree_ - 1) / max_degree_;
    if (popcount(chosen_) + std::max(counting, max_need) >= popcount(best_)) return;

    const Vertex v = order_[depth];

    bool ok = true;
    for_each_vertex(g_.neighbors(v), [&](Vertex u) {
      --available_[u];
      if (need(u) > available_[u]) ok = false;
    });
    if (ok) search(depth + 1);
    if (done_) return;

    // Include v; the neighbours' availability stays decremented since v is
    // no longer undecided.
    chosen_ |= bit(v);
    for_each_vertex(g_.neighbors(v), [&](Vertex u) {
      if (cover_[u] < k_) --total_need_;
      ++cover_[u];
    });
    search(depth + 1);
    for_each_vertex(g_.neighbors(v), [&](Vertex u) {
      --cover_[u];
      if (cover_[u] < k_) ++total_need_;
      ++available_[u];
    });
    chosen_ &= ~bit(v);
  }

  const Graph& g_;
  const int n_;
  const int k_;
  const int max_degree_;
  const int lower_bound_;
  const std::vector<Vertex> order_;
  std::vector<int> cover_;
  std::vector<int> available_;
  int total_need_ = 0;
  VertexMask chosen_ = 0;
  VertexMask best_ = 0;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SignedFunction::SignedFunction(const Graph& g, std::vector<int> values) : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != g.order())
    throw PreconditionError("signed function has " + std::to_string(values_.size()) +
                            " values for a graph of order " + std::to_string(g.order()));
  nbr_sum_.assign(values_.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (values_[v] != 1 && values_[v] != -1)
      throw PreconditionError("signed function value at vertex " + std::to_string(v) +
                              " is not +1 or -1");
    weight_ += values_[v];
    for_each_vertex(g.neighbors(v), [&](Vertex u) { nbr_sum_[u] += values_[v]; });
  }
}

SignedFunction SignedFunction::constant(const Graph& g, int sign) {
  return SignedFunction(g, std::vector<int>(g.order(), sign));
}

SignedFunction SignedFunction::from_minus_set(const Graph& g, const VertexSet& minus) {
  std::vector<int> values(g.order(), 1);
  for (Vertex v : minus.members()) values.at(v) = -1;
  return SignedFunction(g, std::move(values));
}

VertexSet SignedFunction::plus_set() const {
  VertexSet s(order());
  for (Vertex v = 0; v < order(); ++v)
    if (values_[v] == 1) s.insert(v);
  return s;
}

VertexSet SignedFunction::minus_set() const { return plus_set().complement(); }

SignedProblem SignedProblem::inverse_signed_total() {
  return {Direction::maximize, Relation::at_most, 0, "istdn"};
}

SignedProblem SignedProblem::signed_total() {
  return {Direction::minimize, Relation::at_least, 1, "stdn"};
}

SignedProblem SignedProblem::signed_total_2_independence() {
  return {Direction::maximize, Relation::at_most, 1, "st2in"};
}

int signed_order_cap() { return cap_from_env(kSignedOrderCap); }
int enumerate_order_cap() { return cap_from_env(kEnumerateOrderCap); }

bool is_feasible(const Graph& g, const SignedFunction& f, const SignedProblem& p) {
  if (f.order() != g.order())
    throw PreconditionError("signed function defined on " + std::to_string(f.order()) +
                            " vertices, graph has " + std::to_string(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    int sum = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex u) { sum += f[u]; });
    if (!p.admits(sum)) return false;
  }
  return true;
}

SignedResult optimize_signed(const Graph& g, const SignedProblem& p) {
  require_no_isolated(g);
  require_order_at_most(g, signed_order_cap(), "signed solver");
  return SignedSearch(g, p).best();
}

SignedResult istdn(const Graph& g) { return optimize_signed(g, SignedProblem::inverse_signed_total()); }
SignedResult stdn(const Graph& g) { return optimize_signed(g, SignedProblem::signed_total()); }
SignedResult st2in(const Graph& g) {
  return optimize_signed(g, SignedProblem::signed_total_2_independence());
}

std::vector<SignedFunction> enumerate_maximum_istdfs(const Graph& g) {
  require_no_isolated(g);
  require_order_at_most(g, enumerate_order_cap(), "maximum ISTDF enumeration");
  const auto problem = SignedProblem::inverse_signed_total();
  const int value = SignedSearch(g, problem).best().value;
  auto all = SignedSearch(g, problem).all_with_weight(value);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

SetResult ktuple_total_domination(const Graph& g, int k, std::optional<int> lower_bound_hint) {
  require_no_isolated(g);
  const int delta = min_degree(g);
  if (k < 1 || k > delta)
    throw PreconditionError("k-tuple total domination needs 1 <= k <= min degree (" +
                            std::to_string(delta) + "), got k=" + std::to_string(k));
  const int counting = (k * g.order() + max_degree(g) - 1) / max_degree(g);
  const int lower = std::max(counting, lower_bound_hint.value_or(0));
  return TupleSearch(g, k, lower).run();
}

SetResult total_domination(const Graph& g) { return ktuple_total_domination(g, 1); }

bool is_ktuple_total_dominating(const Graph& g, const VertexSet& d, int k) {
  if (d.universe() != g.order()) throw PreconditionError("vertex set does not belong to this graph");
  for (Vertex v = 0; v < g.order(); ++v)
    if (popcount(g.neighbors(v) & d.mask()) < k) return false;
  return true;
}

}  // namespace sigdom
