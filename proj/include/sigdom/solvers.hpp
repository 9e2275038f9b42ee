#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

/// Total labelling V -> {-1,+1} with cached weight and per-vertex open
/// neighbourhood sums f(N(v)).
class SignedFunction {
 public:
  /// Throws PreconditionError when `values` has the wrong length or holds
  /// anything other than -1/+1.
  SignedFunction(const Graph& g, std::vector<int> values);

  static SignedFunction constant(const Graph& g, int sign);
  /// -1 on `minus`, +1 elsewhere.
  static SignedFunction from_minus_set(const Graph& g, const VertexSet& minus);

  int order() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_[v]; }
  std::span<const int> values() const { return values_; }
  int weight() const { return weight_; }
  int neighborhood_sum(Vertex v) const { return nbr_sum_[v]; }

  VertexSet plus_set() const;
  VertexSet minus_set() const;

  bool operator==(const SignedFunction& other) const { return values_ == other.values_; }
  bool operator<(const SignedFunction& other) const { return values_ < other.values_; }

 private:
  std::vector<int> values_;
  std::vector<int> nbr_sum_;
  int weight_ = 0;
};

enum class Direction { maximize, minimize };
enum class Relation { at_most, at_least };

/// One of the three signed optimisation problems over ±1 labellings, each a
/// per-vertex bound on f(N(v)) plus an objective direction for f(V).
class SignedProblem {
 public:
  /// f(N(v)) <= 0, maximise.
  static SignedProblem inverse_signed_total();
  /// f(N(v)) >= 1, minimise.
  static SignedProblem signed_total();
  /// f(N(v)) <= 1, maximise (negative decision number).
  static SignedProblem signed_total_2_independence();

  Direction direction() const { return direction_; }
  Relation relation() const { return relation_; }
  int bound() const { return bound_; }
  std::string_view name() const { return name_; }

  bool admits(int neighborhood_sum) const {
    return relation_ == Relation::at_most ? neighborhood_sum <= bound_ : neighborhood_sum >= bound_;
  }

 private:
  SignedProblem(Direction d, Relation r, int b, std::string_view name)
      : direction_(d), relation_(r), bound_(b), name_(name) {}

  Direction direction_;
  Relation relation_;
  int bound_;
  std::string_view name_;
};

template <class Witness>
struct ParameterResult {
  int value;
  Witness witness;
  std::uint64_t nodes_explored = 0;
};

using SignedResult = ParameterResult<SignedFunction>;
using SetResult = ParameterResult<VertexSet>;

/// Default order caps; the SIGDOM_NODE_CAP environment variable replaces all
/// of them (clamped to 64).
inline constexpr int kSignedOrderCap = 40;
inline constexpr int kEnumerateOrderCap = 24;

int signed_order_cap();
int enumerate_order_cap();

/// True iff f satisfies p's neighbourhood constraint at every vertex.
bool is_feasible(const Graph& g, const SignedFunction& f, const SignedProblem& p);

/// Exact optimum of `p` on g by depth-first branch-and-bound.
///
/// Vertices are branched in descending degree (ties by index), trying the
/// objective-favourable sign first. A partial labelling is cut when some
/// vertex's neighbourhood can no longer meet its bound even if every
/// unlabelled neighbour takes the repairing sign, or when labelling every
/// remaining vertex with the objective-favourable sign cannot beat the
/// incumbent. The incumbent starts at the all -1 (<= problems) or all +1
/// (>= problems) labelling. Requires min degree >= 1.
SignedResult optimize_signed(const Graph& g, const SignedProblem& p);

SignedResult istdn(const Graph& g);
SignedResult stdn(const Graph& g);
SignedResult st2in(const Graph& g);

/// Every labelling achieving the maximum ISTDF weight, in lexicographic order
/// of the value vectors (-1 < +1). Requires n <= enumerate_order_cap().
std::vector<SignedFunction> enumerate_maximum_istdfs(const Graph& g);

/// Minimum |D| with |N(v) ∩ D| >= k for every v, for 1 <= k <= min degree.
///
/// Include/exclude branch-and-bound with deficiency pruning. `lower_bound_hint`
/// is a caller-supplied valid lower bound (typically the (k-1)-tuple value
/// plus one); it is combined with the counting bound ceil(k n / Δ) and the
/// search stops once the incumbent meets it.
SetResult ktuple_total_domination(const Graph& g, int k,
                                  std::optional<int> lower_bound_hint = std::nullopt);

SetResult total_domination(const Graph& g);

/// True iff every vertex has at least k neighbours in `d`.
bool is_ktuple_total_dominating(const Graph& g, const VertexSet& d, int k);

}  // namespace sigdom
