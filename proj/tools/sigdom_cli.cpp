// sigdom: compute signed/total domination parameters, verify the bounds
// relating them, and emit the extremal constructions.
//
// Exit codes: 0 all checks hold, 1 a check was violated, 2 usage, parse or
// precondition error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sigdom/constructions.hpp"
#include "sigdom/generators.hpp"
#include "sigdom/graph_io.hpp"
#include "sigdom/parallel.hpp"
#include "sigdom/solvers.hpp"
#include "sigdom/trees.hpp"
#include "sigdom/verification.hpp"

namespace {

using namespace sigdom;
using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + token + "'");
  }
}

struct Construction {
  Graph graph;
  json facts;
};

std::optional<int> expected_istdn(const std::vector<std::string>& family) {
  const std::string& name = family[0];
  auto arg = [&](std::size_t i) { return parse_int(family.at(i), name); };
  if (name == "hr") return h_graph_istdn(arg(1));
  if (name == "prop41") return arg(1);
  if (name == "complete") return complete_graph_istdn(arg(1));
  if (name == "cycle") return cycle_istdn(arg(1));
  if (name == "bipartite") return complete_bipartite_istdn(arg(1), arg(2));
  if (name == "star") return tree_lower_bound(tree_structure(star_graph(arg(1))));
  return std::nullopt;
}

Graph build_family(const std::vector<std::string>& family) {
  if (family.empty()) throw UsageError("--family needs a name");
  const std::string& name = family[0];
  auto expect_args = [&](std::size_t count) {
    if (family.size() != count + 1)
      throw UsageError("family '" + name + "' takes " + std::to_string(count) + " argument(s)");
  };
  auto arg = [&](std::size_t i) { return parse_int(family[i], name); };
  if (name == "hr") return expect_args(1), build_h_graph(arg(1)).graph;
  if (name == "prop41") return expect_args(1), build_weight_tree(arg(1));
  if (name == "heawood") return expect_args(0), build_heawood();
  if (name == "complete") return expect_args(1), complete_graph(arg(1));
  if (name == "cycle") return expect_args(1), cycle_graph(arg(1));
  if (name == "path") return expect_args(1), path_graph(arg(1));
  if (name == "bipartite") return expect_args(2), complete_bipartite_graph(arg(1), arg(2));
  if (name == "star") return expect_args(1), star_graph(arg(1));
  throw UsageError("unknown family '" + name + "'");
}

struct InputOptions {
  std::string input;
  std::string format = "graph6";
  int trees_up_to = 0;
  std::vector<std::string> family;
  int jobs = 1;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* input = cmd->add_option("--input", in.input, "graph6 or edge-list file (default: stdin)");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  auto* trees = cmd->add_option("--trees-up-to", in.trees_up_to, "all free trees of order 2..N");
  auto* family = cmd->add_option("--family", in.family, "a constructed family, e.g. 'cycle 8'")
                     ->expected(1, 3)
                     ->allow_extra_args(false);
  input->excludes(trees)->excludes(family);
  trees->excludes(family);
  cmd->add_option("--jobs", in.jobs, "worker threads")->check(CLI::PositiveNumber);
}

struct Source {
  std::unique_ptr<std::ifstream> file;
  GraphStream stream{[] { return std::optional<Graph>{}; }};
};

std::unique_ptr<Source> open_source(const InputOptions& in) {
  auto src = std::make_unique<Source>();
  if (in.trees_up_to) {
    if (in.trees_up_to < 2 || in.trees_up_to > kMaxTreeOrder)
      throw UsageError("--trees-up-to must be in 2.." + std::to_string(kMaxTreeOrder));
    src->stream = enumerate_trees_range(2, in.trees_up_to);
  } else if (!in.family.empty()) {
    src->stream = GraphStream::from_graphs({build_family(in.family)});
  } else {
    const auto format = in.format == "edgelist" ? GraphFormat::edge_list : GraphFormat::graph6;
    if (in.input.empty() || in.input == "-") {
      src->stream = GraphStream::from_istream(std::cin, format);
    } else {
      src->file = std::make_unique<std::ifstream>(in.input);
      if (!*src->file) throw UsageError("cannot open " + in.input);
      src->stream = GraphStream::from_istream(*src->file, format);
    }
  }
  return src;
}

std::string locate(const GraphOrigin& origin) {
  std::string where = "graph " + std::to_string(origin.index + 1);
  if (origin.line) where += " (line " + std::to_string(origin.line) + ")";
  return where;
}

int run_compute(const InputOptions& in, const std::string& param, std::optional<int> k) {
  if ((param == "ktd") != k.has_value())
    throw UsageError(param == "ktd" ? "--param ktd requires --k" : "--k is only valid with --param ktd");
  auto src = open_source(in);
  ordered_parallel_map<json>(
      src->stream, in.jobs,
      [&](const Graph& g, const GraphOrigin& origin) {
        try {
          json line{{"graph_id", write_graph6(g)}, {"param", param}};
          if (param == "td" || param == "ktd") {
            const SetResult r = param == "td" ? total_domination(g) : ktuple_total_domination(g, *k);
            if (k) line["k"] = *k;
            line["value"] = r.value;
            line["witness"] = r.witness.members();
          } else {
            const SignedResult r = param == "istdn" ? istdn(g) : param == "stdn" ? stdn(g) : st2in(g);
            line["value"] = r.value;
            line["witness"] = r.witness.values();
          }
          return line;
        } catch (const PreconditionError& e) {
          throw UsageError(locate(origin) + ": " + e.what());
        }
      },
      [](const GraphOrigin&, const json& line) { std::cout << line.dump() << '\n'; });
  return 0;
}

std::vector<CheckId> suite_checks(const std::string& suite) {
  if (suite == "t22" || suite == "total-domination") return {CheckId::total_domination_bound};
  if (suite == "turan") return {CheckId::turan_bound};
  if (suite == "regular") return {CheckId::regular_identities, CheckId::regular_bounds};
  if (suite == "cubic") return {CheckId::cubic_lower_bound};
  if (suite == "lemma42" || suite == "leaf-half") return {CheckId::leaf_half_assignment};
  if (suite == "t43" || suite == "tree-bound") return {CheckId::tree_lower_bound};
  if (suite == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
  throw UsageError("unknown suite '" + suite + "'");
}

int run_verify(const InputOptions& in, const std::vector<std::string>& suite) {
  SuiteOptions options{suite_checks(suite.at(0)), std::nullopt, in.jobs};
  if (suite.size() == 2) {
    if (suite[0] != "turan") throw UsageError("only the turan suite takes a parameter");
    options.turan_r = parse_int(suite[1], "turan r");
    if (*options.turan_r < 2) throw UsageError("turan r must be at least 2");
  }
  auto src = open_source(in);
  const SuiteSummary summary = run_suite(src->stream, options, [](const CheckReport& r) {
    std::cout << r.to_json().dump() << '\n';
  });
  std::cout << summary.to_json().dump() << '\n';
  return summary.ok() ? 0 : kExitViolation;
}

int run_construct(const std::vector<std::string>& family, bool describe) {
  const Graph g = build_family(family);
  std::cout << write_graph6(g) << '\n';
  if (describe) {
    json facts{{"family", family[0]},
               {"n", g.order()},
               {"m", g.edge_count()},
               {"min_degree", min_degree(g)},
               {"max_degree", max_degree(g)}};
    if (auto r = regularity(g)) facts["regular"] = *r;
    if (auto e = expected_istdn(family)) facts["expected_istdn"] = *e;
    std::cout << facts.dump() << '\n';
  }
  return 0;
}

int run_enumerate(int up_to) {
  if (up_to < 2 || up_to > kMaxTreeOrder)
    throw UsageError("--trees-up-to must be in 2.." + std::to_string(kMaxTreeOrder));
  auto stream = enumerate_trees_range(2, up_to);
  while (auto t = stream.next()) std::cout << write_graph6(*t) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signed and total domination parameters with bound verification"};
  app.require_subcommand(1);

  InputOptions compute_in;
  std::string param;
  std::optional<int> k;
  auto* compute = app.add_subcommand("compute", "compute a parameter for each input graph");
  compute->add_option("--param", param, "parameter")
      ->required()
      ->check(CLI::IsMember({"istdn", "stdn", "st2in", "td", "ktd"}));
  compute->add_option("--k", k, "tuple order for ktd");
  add_input_options(compute, compute_in);

  InputOptions verify_in;
  std::vector<std::string> suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite over a corpus");
  verify->add_option("--suite", suite, "total-domination (t22) | turan [r] | regular | cubic | leaf-half (lemma42) | tree-bound (t43) | all")
      ->required()
      ->expected(1, 2);
  add_input_options(verify, verify_in);

  std::vector<std::string> family;
  bool describe = false;
  auto* construct = app.add_subcommand("construct", "emit a constructed graph as graph6");
  construct
      ->add_option("--family", family,
                   "hr r | prop41 k | heawood | complete n | cycle n | path n | bipartite m n | star n")
      ->required()
      ->expected(1, 3);
  construct->add_flag("--describe", describe, "add a JSON line with invariant facts");

  int up_to = 0;
  auto* enumerate = app.add_subcommand("enumerate", "emit all free trees as graph6");
  enumerate->add_option("--trees-up-to", up_to, "largest order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) return run_compute(compute_in, param, k);
    if (*verify) return run_verify(verify_in, suite);
    if (*construct) return run_construct(family, describe);
    if (*enumerate) return run_enumerate(up_to);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
