#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigdom/graph.hpp"
#include "sigdom/graph_io.hpp"
#include "sigdom/solvers.hpp"

namespace sigdom {

using Rational = boost::rational<long long>;

/// A bound value: exact rational, or a floating approximation when the value
/// is irrational (only the clique-free bound's square root term).
class Quantity {
 public:
  Quantity(int v) : value_(Rational(v)) {}
  Quantity(long long v) : value_(Rational(v)) {}
  Quantity(Rational q) : value_(q) {}
  static Quantity real(double x) { return Quantity(x); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  Rational exact() const { return std::get<Rational>(value_); }
  double approx() const;

  /// Integers as JSON numbers, other rationals as "p/q" strings, reals as
  /// JSON doubles.
  nlohmann::json to_json() const;
  std::string to_string() const;

 private:
  explicit Quantity(double x) : value_(x) {}
  std::variant<Rational, double> value_;
};

/// Tolerance for comparisons involving a real-valued bound.
inline constexpr double kRealTolerance = 1e-9;

enum class CheckId {
  total_domination_bound,
  turan_bound,
  regular_identities,
  regular_bounds,
  cubic_lower_bound,
  leaf_half_assignment,
  tree_lower_bound,
};

inline constexpr CheckId kAllChecks[] = {
    CheckId::total_domination_bound, CheckId::turan_bound,         CheckId::regular_identities,
    CheckId::regular_bounds,         CheckId::cubic_lower_bound,   CheckId::leaf_half_assignment,
    CheckId::tree_lower_bound,
};

std::string_view to_string(CheckId id);

enum class Status { holds, violated, inapplicable };

std::string_view to_string(Status s);

using Witness = std::variant<SignedFunction, VertexSet>;

struct CheckReport {
  CheckId check = CheckId::total_domination_bound;
  std::string graph_id;
  Quantity lhs = 0;
  Quantity rhs = 0;
  /// Interval checks carry their bounds in lhs/rhs and the tested value here.
  std::optional<Quantity> value;
  /// The inequality or identity as literally evaluated on lhs/rhs/value.
  bool holds = false;
  bool sharp = false;
  /// inapplicable when the graph misses the check's precondition; such
  /// reports never count as violations.
  Status status = Status::inapplicable;
  std::optional<Witness> witness;
  std::string notes;

  /// {check_id, graph_id, lhs, rhs, holds, sharp, status, notes}, plus
  /// "value" for interval checks.
  nlohmann::json to_json() const;
};

/// One graph plus lazily computed, memoised solver outputs. Not thread-safe;
/// use one instance per worker.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g);

  const Graph& graph() const { return graph_; }
  const std::string& id() const { return id_; }

  const SignedResult& istdn();
  const SignedResult& stdn();
  const SignedResult& st2in();
  /// gamma_{x k, t}; k = 0 yields the empty set. Uses the (k-1) value as a
  /// lower-bound hint when it has already been computed.
  const SetResult& ktuple(int k);
  int clique_number();

 private:
  Graph graph_;
  std::string id_;
  std::optional<SignedResult> istdn_, stdn_, st2in_;
  std::map<int, SetResult> ktuple_;
  std::optional<int> clique_;
};

/// istdn <= n - 2 ceil((2 gamma_t + delta - 2) / 2). Connected, delta >= 1.
CheckReport check_total_domination_bound(GraphFacts& facts);

/// istdn <= n - (r/(r-1)) (-c + sqrt(c^2 + 4 ((r-1)/r) c n)), c = ceil(delta/2),
/// for K_{r+1}-free graphs. Without `r`, the smallest admissible r >= 2 (the
/// clique number) is used. Graphs containing K_{r+1} are inapplicable.
CheckReport check_turan_bound(GraphFacts& facts, std::optional<int> r = std::nullopt);

/// For connected r-regular graphs:
///   istdn = n - 2 gamma_{x ceil(r/2), t}
///   stdn  = 2 gamma_{x ceil((r+1)/2), t} - n
///   st2in = n - 2 gamma_{x floor(r/2), t}
/// and istdn = -stdn (r odd) or istdn = st2in (r even).
CheckReport check_regular_identities(GraphFacts& facts);

/// For connected r-regular graphs, istdn lies in
/// [((1-r)/(1+r)) n, 0] for even r and [-((r^2+1)/(r^2+2r-1)) n, -n/r] for odd r.
CheckReport check_regular_bounds(GraphFacts& facts);

/// istdn >= -2n/3 for connected cubic graphs other than the Heawood graph,
/// which is reported as an inapplicable exception.
CheckReport check_cubic_lower_bound(GraphFacts& facts);

/// Some maximum ISTDF of the tree gives +1 to at least floor(l_i/2) leaves of
/// every support vertex. Trees with 2 <= n <= 14.
CheckReport check_leaf_half_assignment(GraphFacts& facts);

/// istdn >= -n + 2 sum floor(l_i/2), with equality exactly on the
/// omega_membership family. Trees with n >= 2.
CheckReport check_tree_lower_bound(GraphFacts& facts);

inline constexpr int kLeafAssignmentOrderCap = 14;

CheckReport run_check(CheckId id, GraphFacts& facts, std::optional<int> turan_r = std::nullopt);

struct CheckCounts {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inapplicable = 0;
  std::size_t sharp = 0;

  std::size_t total() const { return passed + failed + inapplicable; }
};

struct SuiteSummary {
  std::size_t graphs = 0;
  std::map<CheckId, CheckCounts> counts;
  /// Violations, sorted by graph_id.
  std::vector<CheckReport> failures;

  bool ok() const { return failures.empty(); }
  void add(const CheckReport& report);
  void finalize();
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::vector<CheckId> checks;
  std::optional<int> turan_r;
  int jobs = 1;
};

using ReportSink = std::function<void(const CheckReport&)>;

/// Runs every selected check on every graph of the stream. Reports reach
/// `sink` in corpus order regardless of `jobs`. Stream errors propagate.
SuiteSummary run_suite(GraphStream& corpus, const SuiteOptions& options,
                       const ReportSink& sink = {});

}  // namespace sigdom
