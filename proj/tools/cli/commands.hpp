#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cli/reports.hpp"

namespace ccodes::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPreconditionError = 3;

struct VerifyArgs {
  std::string path;
  std::optional<int> k;  // falls back to the file's k= header
  Method method = Method::direct;
};

struct ConstructArgs {
  enum class Kind { family, builtin, projection } kind = Kind::family;
  int k = 0;
  int l = 0;
  std::string name;
  std::optional<std::string> out_path;
};

struct SearchArgs {
  int d = 0;
  int k = 0;
  std::optional<int> phi;
  bool symmetric = false;
  std::optional<std::int64_t> budget_nodes;
  std::optional<double> budget_time_seconds;
  std::optional<std::string> seed_witness_path;
  std::optional<int> max_length;
};

struct BoundsArgs {
  int d = 0;
  int k = 0;
};

struct ProjectArgs {
  std::string path;
  int label = 0;
  std::optional<std::string> out_path;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_construct(const ConstructArgs& args, std::ostream& out);
int cmd_search(const SearchArgs& args, std::ostream& out);
int cmd_bounds(const BoundsArgs& args, std::ostream& out);
int cmd_project(const ProjectArgs& args, std::ostream& out);

}  // namespace ccodes::cli
