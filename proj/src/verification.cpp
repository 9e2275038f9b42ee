#include "sigdom/verification.hpp"

#include <algorithm>
#include <cmath>

#include "sigdom/clique.hpp"
#include "sigdom/constructions.hpp"
#include "sigdom/parallel.hpp"

namespace sigdom {

namespace {

long long ceil_half(long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

std::optional<long long> exact_sqrt(long long x) {
  if (x < 0) return std::nullopt;
  auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s * s == x ? std::optional(s) : std::nullopt;
}

CheckReport make_report(CheckId id, const GraphFacts& facts) {
  CheckReport r;
  r.check = id;
  r.graph_id = facts.id();
  return r;
}

CheckReport inapplicable(CheckId id, const GraphFacts& facts, std::string why) {
  CheckReport r = make_report(id, facts);
  r.status = Status::inapplicable;
  r.notes = std::move(why);
  return r;
}

void settle(CheckReport& r) { r.status = r.holds ? Status::holds : Status::violated; }

std::string rational_string(Rational q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

double Quantity::approx() const {
  if (const auto* q = std::get_if<Rational>(&value_))
    return static_cast<double>(q->numerator()) / static_cast<double>(q->denominator());
  return std::get<double>(value_);
}

nlohmann::json Quantity::to_json() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    if (q->denominator() == 1) return q->numerator();
    return rational_string(*q);
  }
  return std::get<double>(value_);
}

std::string Quantity::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return rational_string(*q);
  return nlohmann::json(std::get<double>(value_)).dump();
}

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::total_domination_bound: return "total_domination_bound";
    case CheckId::turan_bound: return "turan_bound";
    case CheckId::regular_identities: return "regular_identities";
    case CheckId::regular_bounds: return "regular_bounds";
    case CheckId::cubic_lower_bound: return "cubic_lower_bound";
    case CheckId::leaf_half_assignment: return "leaf_half_assignment";
    case CheckId::tree_lower_bound: return "tree_lower_bound";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::inapplicable: return "inapplicable";
  }
  return "unknown";
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check_id"] = to_string(check);
  j["graph_id"] = graph_id;
  j["lhs"] = lhs.to_json();
  j["rhs"] = rhs.to_json();
  if (value) j["value"] = value->to_json();
  j["holds"] = holds;
  j["sharp"] = sharp;
  j["status"] = to_string(status);
  j["notes"] = notes;
  return j;
}

GraphFacts::GraphFacts(Graph g) : graph_(std::move(g)), id_(write_graph6(graph_)) {}

const SignedResult& GraphFacts::istdn() {
  if (!istdn_) istdn_ = sigdom::istdn(graph_);
  return *istdn_;
}

const SignedResult& GraphFacts::stdn() {
  if (!stdn_) stdn_ = sigdom::stdn(graph_);
  return *stdn_;
}

const SignedResult& GraphFacts::st2in() {
  if (!st2in_) st2in_ = sigdom::st2in(graph_);
  return *st2in_;
}

const SetResult& GraphFacts::ktuple(int k) {
  if (auto it = ktuple_.find(k); it != ktuple_.end()) return it->second;
  if (k == 0) return ktuple_.emplace(0, SetResult{0, VertexSet(graph_.order()), 0}).first->second;
  std::optional<int> hint;
  if (auto prev = ktuple_.find(k - 1); prev != ktuple_.end() && k > 1) hint = prev->second.value + 1;
  return ktuple_.emplace(k, ktuple_total_domination(graph_, k, hint)).first->second;
}

int GraphFacts::clique_number() {
  if (!clique_) clique_ = sigdom::clique_number(graph_);
  return *clique_;
}

CheckReport check_total_domination_bound(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::total_domination_bound;
  if (g.order() < 2 || !is_connected(g)) return inapplicable(id, facts, "graph is not connected");
  const int n = g.order();
  const int delta = min_degree(g);
  const int gamma_t = facts.ktuple(1).value;
  const long long rhs = n - 2 * ceil_half(2LL * gamma_t + delta - 2);

  CheckReport r = make_report(id, facts);
  r.lhs = facts.istdn().value;
  r.rhs = rhs;
  r.holds = facts.istdn().value <= rhs;
  r.sharp = facts.istdn().value == rhs;
  r.witness = facts.istdn().witness;
  r.notes = "gamma_t=" + std::to_string(gamma_t) + " delta=" + std::to_string(delta);
  settle(r);
  return r;
}

CheckReport check_turan_bound(GraphFacts& facts, std::optional<int> r_opt) {
  const Graph& g = facts.graph();
  const auto id = CheckId::turan_bound;
  if (g.order() == 0 || min_degree(g) < 1) return inapplicable(id, facts, "isolated vertex");
  const int omega = facts.clique_number();
  const int r = r_opt.value_or(std::max(2, omega));
  if (r < 2) return inapplicable(id, facts, "r must be at least 2");
  if (omega > r)
    return inapplicable(id, facts, "contains K_" + std::to_string(r + 1) + " (clique number " +
                                       std::to_string(omega) + ")");

  const long long n = g.order();
  const long long c = ceil_half(min_degree(g));
  const int value = facts.istdn().value;
  // radicand = c^2 + 4 ((r-1)/r) c n
  const Rational radicand = Rational(c * c) + Rational(4 * (r - 1) * c * n, r);
  const auto num_root = exact_sqrt(radicand.numerator());
  const auto den_root = exact_sqrt(radicand.denominator());

  CheckReport rep = make_report(id, facts);
  rep.lhs = value;
  std::string form;
  if (num_root && den_root) {
    const Rational root(*num_root, *den_root);
    const Rational bound = Rational(n) - Rational(r, r - 1) * (Rational(-c) + root);
    rep.rhs = bound;
    rep.holds = Rational(value) <= bound;
    rep.sharp = Rational(value) == bound;
    form = "exact";
  } else {
    const double root = std::sqrt(static_cast<double>(radicand.numerator()) /
                                  static_cast<double>(radicand.denominator()));
    const double bound = static_cast<double>(n) -
                         (static_cast<double>(r) / (r - 1)) * (-static_cast<double>(c) + root);
    rep.rhs = Quantity::real(bound);
    rep.holds = value <= bound + kRealTolerance;
    rep.sharp = std::abs(value - bound) <= kRealTolerance;
    form = "real";
  }
  rep.witness = facts.istdn().witness;
  rep.notes = "r=" + std::to_string(r) + " c=" + std::to_string(c) + " radicand=" +
              rational_string(radicand) + " " + form;
  settle(rep);
  return rep;
}

CheckReport check_regular_identities(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::regular_identities;
  const auto reg = regularity(g);
  if (!reg || *reg < 1 || !is_connected(g)) return inapplicable(id, facts, "not connected regular");
  const int r = *reg;
  const int n = g.order();
  const int istdn = facts.istdn().value;
  const int stdn = facts.stdn().value;
  const int st2in = facts.st2in().value;
  const int g_istdn = n - 2 * facts.ktuple((r + 1) / 2).value;
  const int g_stdn = 2 * facts.ktuple((r + 2) / 2).value - n;
  const int g_st2in = n - 2 * facts.ktuple(r / 2).value;

  CheckReport rep = make_report(id, facts);
  rep.lhs = istdn;
  rep.rhs = r % 2 == 1 ? -stdn : st2in;
  const bool relation = r % 2 == 1 ? istdn == -stdn : istdn == st2in;
  rep.holds = relation && istdn == g_istdn && stdn == g_stdn && st2in == g_st2in;
  rep.notes = "r=" + std::to_string(r) + " istdn=" + std::to_string(istdn) + " (tuple form " +
              std::to_string(g_istdn) + ") stdn=" + std::to_string(stdn) + " (tuple form " +
              std::to_string(g_stdn) + ") st2in=" + std::to_string(st2in) + " (tuple form " +
              std::to_string(g_st2in) + ")";
  settle(rep);
  return rep;
}

CheckReport check_regular_bounds(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::regular_bounds;
  const auto reg = regularity(g);
  if (!reg || *reg < 1 || !is_connected(g)) return inapplicable(id, facts, "not connected regular");
  const long long r = *reg;
  const long long n = g.order();
  Rational lo, hi;
  if (r % 2 == 0) {
    lo = Rational((1 - r) * n, 1 + r);
    hi = 0;
  } else {
    lo = -Rational((r * r + 1) * n, r * r + 2 * r - 1);
    hi = -Rational(n, r);
  }
  const Rational v = facts.istdn().value;

  CheckReport rep = make_report(id, facts);
  rep.lhs = lo;
  rep.rhs = hi;
  rep.value = v;
  rep.holds = lo <= v && v <= hi;
  rep.sharp = v == lo || v == hi;
  rep.witness = facts.istdn().witness;
  rep.notes = "r=" + std::to_string(r);
  if (v == lo) rep.notes += " sharp=lower";
  if (v == hi) rep.notes += " sharp=upper";
  settle(rep);
  return rep;
}

CheckReport check_cubic_lower_bound(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::cubic_lower_bound;
  if (regularity(g) != 3 || !is_connected(g)) return inapplicable(id, facts, "not connected cubic");
  const Rational bound(-2 * g.order(), 3);
  const int value = facts.istdn().value;

  CheckReport rep = make_report(id, facts);
  rep.lhs = value;
  rep.rhs = bound;
  rep.holds = Rational(value) >= bound;
  rep.sharp = Rational(value) == bound;
  rep.witness = facts.istdn().witness;
  if (is_heawood(g)) {
    rep.status = Status::inapplicable;
    rep.notes = "Heawood exception: istdn=" + std::to_string(value) + " against excluded bound " +
                rational_string(bound);
    return rep;
  }
  settle(rep);
  return rep;
}

CheckReport check_leaf_half_assignment(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::leaf_half_assignment;
  if (g.order() < 2 || !is_tree(g)) return inapplicable(id, facts, "not a tree");
  if (g.order() > kLeafAssignmentOrderCap)
    return inapplicable(id, facts, "order above " + std::to_string(kLeafAssignmentOrderCap));

  const TreeStructure ts = tree_structure(g);
  const auto maxima = enumerate_maximum_istdfs(g);
  long long satisfying = 0;
  std::optional<SignedFunction> first;
  for (const auto& f : maxima) {
    bool ok = true;
    for (std::size_t i = 0; i < ts.support_list.size() && ok; ++i) {
      const int plus = popcount(ts.leaf_groups[i].mask() & f.plus_set().mask());
      ok = plus >= ts.leaf_count(i) / 2;
    }
    if (ok) {
      ++satisfying;
      if (!first) first = f;
    }
  }

  CheckReport rep = make_report(id, facts);
  rep.lhs = satisfying;
  rep.rhs = 1;
  rep.holds = satisfying >= 1;
  if (first) rep.witness = *first;
  rep.notes = std::to_string(satisfying) + " of " + std::to_string(maxima.size()) +
              " maximum ISTDFs satisfy the leaf condition";
  settle(rep);
  return rep;
}

CheckReport check_tree_lower_bound(GraphFacts& facts) {
  const Graph& g = facts.graph();
  const auto id = CheckId::tree_lower_bound;
  if (g.order() < 2 || !is_tree(g)) return inapplicable(id, facts, "not a tree");

  const TreeStructure ts = tree_structure(g);
  const int bound = tree_lower_bound(ts);
  const OmegaVerdict omega = omega_membership(ts);
  const int value = facts.istdn().value;

  CheckReport rep = make_report(id, facts);
  rep.lhs = value;
  rep.rhs = bound;
  rep.sharp = value == bound;
  rep.holds = value >= bound && rep.sharp == omega.member;
  rep.witness = facts.istdn().witness;
  rep.notes = std::string(omega.member ? "member" : "non-member") + " (" + omega.clause +
              (omega.detail.empty() ? "" : ": " + omega.detail) + ")";
  settle(rep);
  return rep;
}

CheckReport run_check(CheckId id, GraphFacts& facts, std::optional<int> turan_r) {
  try {
    switch (id) {
      case CheckId::total_domination_bound: return check_total_domination_bound(facts);
      case CheckId::turan_bound: return check_turan_bound(facts, turan_r);
      case CheckId::regular_identities: return check_regular_identities(facts);
      case CheckId::regular_bounds: return check_regular_bounds(facts);
      case CheckId::cubic_lower_bound: return check_cubic_lower_bound(facts);
      case CheckId::leaf_half_assignment: return check_leaf_half_assignment(facts);
      case CheckId::tree_lower_bound: return check_tree_lower_bound(facts);
    }
  } catch (const PreconditionError& e) {
    return inapplicable(id, facts, e.what());
  }
  return inapplicable(id, facts, "unknown check");
}

void SuiteSummary::add(const CheckReport& report) {
  CheckCounts& c = counts[report.check];
  switch (report.status) {
    case Status::holds: ++c.passed; break;
    case Status::violated:
      ++c.failed;
      failures.push_back(report);
      break;
    case Status::inapplicable: ++c.inapplicable; break;
  }
  if (report.sharp && report.status == Status::holds) ++c.sharp;
}

void SuiteSummary::finalize() {
  std::stable_sort(failures.begin(), failures.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.graph_id < b.graph_id; });
}

nlohmann::json SuiteSummary::to_json() const {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [id, c] : counts)
    checks[std::string(to_string(id))] = {{"passed", c.passed},
                                          {"failed", c.failed},
                                          {"inapplicable", c.inapplicable},
                                          {"sharp", c.sharp}};
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& f : failures)
    failed.push_back({{"check_id", to_string(f.check)}, {"graph_id", f.graph_id}, {"notes", f.notes}});
  return {{"summary", {{"graphs", graphs}, {"checks", checks}, {"failures", failed}, {"ok", ok()}}}};
}

SuiteSummary run_suite(GraphStream& corpus, const SuiteOptions& options, const ReportSink& sink) {
  SuiteSummary summary;
  for (CheckId id : options.checks) summary.counts[id];
  ordered_parallel_map<std::vector<CheckReport>>(
      corpus, options.jobs,
      [&](const Graph& g, const GraphOrigin&) {
        GraphFacts facts(g);
        std::vector<CheckReport> reports;
        for (CheckId id : options.checks) reports.push_back(run_check(id, facts, options.turan_r));
        return reports;
      },
      [&](const GraphOrigin&, std::vector<CheckReport>& reports) {
        ++summary.graphs;
        for (const auto& r : reports) {
          summary.add(r);
          if (sink) sink(r);
        }
      });
  summary.finalize();
  return summary;
}

}  // namespace sigdom
