#include "cli/reports.hpp"

#include "ccodes/errors.hpp"

namespace ccodes::cli {

using nlohmann::json;

Method method_from_name(const std::string& name) {
  if (name == "direct") return Method::direct;
  if (name == "klee") return Method::klee;
  if (name == "decomposition") return Method::decomposition;
  if (name == "all") return Method::all;
  throw precondition_error("unknown method '" + name +
                           "' (known: direct, klee, decomposition, all)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::klee: return "klee";
    case Method::decomposition: return "decomposition";
    case Method::all: return "all";
  }
  return "direct";
}

std::vector<std::string> method_citations(Method m) {
  switch (m) {
    case Method::direct: return {"spread-definition"};
    case Method::klee: return {"klee-segment-criterion"};
    case Method::decomposition: return {"subcircuit-characterization", "deimer-projection"};
    case Method::all:
      return {"spread-definition", "klee-segment-criterion", "subcircuit-characterization",
              "deimer-projection"};
  }
  return {};
}

json report_json(const CodeReport& r, Method m) {
  return json{{"dimension", r.dimension_declared},
              {"dimension_used", r.dimension_used},
              {"length", r.length},
              {"is_circuit", r.circuit},
              {"spread", r.spread},
              {"spread_capped", r.spread_capped},
              {"phi", r.phi},
              {"xi", r.xi},
              {"symmetric", r.symmetric},
              {"method", method_name(m)},
              {"citations", method_citations(m)}};
}

json verify_json(const VerifyOutcome& v, Method m) {
  json out = report_json(v.report, m);
  out["citations"] = json::array();
  for (const auto& name : v.methods_run) {
    for (const auto& c : method_citations(method_from_name(name))) {
      out["citations"].push_back(c);
    }
  }
  if (v.methods_run.empty()) out["citations"] = method_citations(m);
  out["methods_run"] = v.methods_run;
  if (v.requested_spread) out["requested_spread"] = *v.requested_spread;
  if (v.verified) out["verified"] = *v.verified;
  if (v.disagreement) out["disagreement"] = true;
  return out;
}

json construct_json(const TransitionSequence& t, const CodeReport& r,
                    const std::optional<std::string>& file) {
  json out = report_json(r, Method::direct);
  out["transitions"] = t.labels();
  out["file"] = file ? json(*file) : json(nullptr);
  return out;
}

json search_json(const SearchProblem& p, const SearchResult& r) {
  json out;
  out["dimension"] = p.d;
  out["spread"] = p.k;
  out["min_phi"] = p.min_phi ? json(*p.min_phi) : json(nullptr);
  out["symmetric"] = p.symmetric;
  out["best_length"] = r.best_length;
  out["witness"] = r.witness ? json(r.witness->labels()) : json(nullptr);
  out["exhaustive"] = r.exhaustive;
  out["status"] = r.exhaustive ? "exhaustive" : "consistent, not exhaustive";
  out["nodes_explored"] = r.nodes_explored;
  out["elapsed_seconds"] = r.elapsed.count();
  return out;
}

namespace {

json bound_json(const BoundEntry& b) {
  json out;
  out["value"] = b.value;
  out["citation"] = b.citation;
  out["quantity"] = b.quantity == Quantity::K ? "K" : "L";
  if (b.quantity == Quantity::L) out["min_phi"] = b.r;
  return out;
}

}  // namespace

json bounds_json(const BoundsReport& b) {
  json out;
  out["dimension"] = b.d;
  out["spread"] = b.k;
  out["lower_bounds"] = json::array();
  for (const auto& e : b.lower_bounds) out["lower_bounds"].push_back(bound_json(e));
  out["upper_bounds"] = json::array();
  for (const auto& e : b.upper_bounds) out["upper_bounds"].push_back(bound_json(e));
  out["exact"] = b.exact ? bound_json(*b.exact) : json(nullptr);
  out["consistent"] = b.consistent;
  out["notes"] = b.notes;
  return out;
}

json project_json(const Projection& p, const CodeReport& result_report,
                  const std::optional<std::string>& file) {
  json out;
  out["removed_label"] = p.removed_label;
  out["occurrences"] = p.occurrences;
  out["source_length"] = p.source.length();
  out["report"] = report_json(result_report, Method::direct);
  out["report"]["citations"] = std::vector<std::string>{"deimer-projection"};
  out["transitions"] = p.result.labels();
  out["file"] = file ? json(*file) : json(nullptr);
  return out;
}

}  // namespace ccodes::cli
