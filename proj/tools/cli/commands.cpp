#include "cli/commands.hpp"

#include <chrono>
#include <ostream>

#include "ccodes/construct.hpp"
#include "cli/codefile.hpp"

namespace ccodes::cli {

namespace {

void print(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

bool decomposition_applicable(const CodeReport& r, int k) {
  return k >= 2 && r.dimension_declared >= k && r.length > 4 * (k - 1);
}

}  // namespace

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  CodeFile file = load_code(args.path);
  const TransitionSequence& t = file.sequence;

  VerifyOutcome v;
  v.report = analyze(t);
  v.requested_spread = args.k ? args.k : file.declared_k;

  if (!v.requested_spread) {
    print(out, verify_json(v, args.method));
    return kExitOk;
  }
  int k = *v.requested_spread;

  if (!v.report.circuit) {
    v.verified = false;
    print(out, verify_json(v, args.method));
    return kExitVerifyFailed;
  }

  // Method preconditions beyond circuit-ness are hard errors for the
  // explicitly selected method, but merely skip it under "all".
  bool klee_ok = t.length() >= 2 * k;
  bool decomp_ok = decomposition_applicable(v.report, k);
  if (args.method == Method::klee && !klee_ok) {
    throw precondition_error("klee method requires N >= 2k (N=" +
                             std::to_string(t.length()) + ", k=" + std::to_string(k) + ")");
  }
  if (args.method == Method::decomposition && !decomp_ok) {
    throw precondition_error(
        "decomposition method requires k >= 2, d >= k and N > 4(k-1)");
  }

  std::optional<bool> verdict;
  v.disagreement = false;
  auto consider = [&](const std::string& name, bool value) {
    v.methods_run.push_back(name);
    if (verdict && *verdict != value) v.disagreement = true;
    if (!verdict) verdict = value;
  };
  if (args.method == Method::direct || args.method == Method::all) {
    consider("direct", is_spread_at_least(t, k));
  }
  if (args.method == Method::klee || (args.method == Method::all && klee_ok)) {
    consider("klee", is_spread_at_least_klee(t, k));
  }
  if (args.method == Method::decomposition || (args.method == Method::all && decomp_ok)) {
    consider("decomposition", spread_via_characterization(t, k));
  }

  v.verified = !v.disagreement && verdict.value_or(false);
  print(out, verify_json(v, args.method));
  return *v.verified ? kExitOk : kExitVerifyFailed;
}

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
  TransitionSequence t;
  std::optional<int> k;
  switch (args.kind) {
    case ConstructArgs::Kind::family:
      t = construct_form(args.k, args.l);
      k = args.k;
      break;
    case ConstructArgs::Kind::builtin:
      t = builtin_code(args.name);
      k = 9;  // both builtins are spread-9 codes
      break;
    case ConstructArgs::Kind::projection:
      t = projected_family(args.k, args.l);
      k = args.k;
      break;
  }
  if (args.out_path) save_code(*args.out_path, t, k);
  print(out, construct_json(t, analyze(t), args.out_path));
  return kExitOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out) {
  SearchProblem p;
  p.d = args.d;
  p.k = args.k;
  p.min_phi = args.phi;
  p.symmetric = args.symmetric;
  p.max_length_hint = args.max_length;
  p.node_budget = args.budget_nodes;
  if (args.budget_time_seconds) {
    p.time_budget = std::chrono::duration<double>(*args.budget_time_seconds);
  }
  if (args.seed_witness_path) {
    p.seed = load_code(*args.seed_witness_path).sequence;
  }
  SearchResult r = search_max(p);
  print(out, search_json(p, r));
  return r.witness ? kExitOk : kExitVerifyFailed;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
  print(out, bounds_json(bounds_report(args.d, args.k)));
  return kExitOk;
}

int cmd_project(const ProjectArgs& args, std::ostream& out) {
  CodeFile file = load_code(args.path);
  Projection p = deimer_project(file.sequence, args.label);
  if (args.out_path) save_code(*args.out_path, p.result);
  print(out, project_json(p, analyze(p.result), args.out_path));
  return kExitOk;
}

}  // namespace ccodes::cli
