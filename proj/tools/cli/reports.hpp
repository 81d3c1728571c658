#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccodes/analysis.hpp"
#include "ccodes/bounds.hpp"
#include "ccodes/search.hpp"
#include "ccodes/subcircuit.hpp"

namespace ccodes::cli {

// The verification methods the CLI can apply.
enum class Method { direct, klee, decomposition, all };

Method method_from_name(const std::string& name);  // precondition_error on unknown
std::string method_name(Method m);
std::vector<std::string> method_citations(Method m);

// The CodeReport keys shared by every command that prints a code.
nlohmann::json report_json(const CodeReport& r, Method m);

struct VerifyOutcome {
  CodeReport report;
  std::optional<int> requested_spread;
  std::optional<bool> verified;
  bool disagreement = false;
  std::vector<std::string> methods_run;
};

nlohmann::json verify_json(const VerifyOutcome& v, Method m);

nlohmann::json construct_json(const TransitionSequence& t, const CodeReport& r,
                              const std::optional<std::string>& file);

nlohmann::json search_json(const SearchProblem& p, const SearchResult& r);

nlohmann::json bounds_json(const BoundsReport& b);

nlohmann::json project_json(const Projection& p, const CodeReport& result_report,
                            const std::optional<std::string>& file);

}  // namespace ccodes::cli
