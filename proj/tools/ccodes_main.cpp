#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace cli = ccodes::cli;

int main(int argc, char** argv) {
  CLI::App app{"circuit codes of spread k in the hypercube: verify, construct, search, bounds"};
  app.require_subcommand(1);

  cli::VerifyArgs verify_args;
  std::string method_name = "direct";
  auto* verify = app.add_subcommand("verify", "analyze a code file, optionally checking a spread");
  verify->add_option("file", verify_args.path, "code file")->required();
  verify->add_option("--k", verify_args.k, "spread to verify");
  verify->add_option("--method", method_name, "direct|klee|decomposition|all")
      ->default_val("direct");

  cli::ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "emit a known code");
  construct->require_subcommand(1);
  auto* family = construct->add_subcommand("family", "symmetric family member (k odd, l even)");
  family->add_option("k", construct_args.k, "spread (odd, >= 5)")->required();
  family->add_option("l", construct_args.l, "phi margin (even, >= 2)")->required();
  family->add_option("-o,--out", construct_args.out_path, "write code file here");
  auto* builtin = construct->add_subcommand("builtin", "a published code by name");
  builtin->add_option("name", construct_args.name, "example1 | example1-variant")->required();
  builtin->add_option("-o,--out", construct_args.out_path, "write code file here");
  auto* projection =
      construct->add_subcommand("projection", "projected family member (k even, l odd)");
  projection->add_option("k", construct_args.k, "spread (even, >= 4)")->required();
  projection->add_option("l", construct_args.l, "phi margin (odd, >= 3)")->required();
  projection->add_option("-o,--out", construct_args.out_path, "write code file here");

  cli::SearchArgs search_args;
  auto* search = app.add_subcommand("search", "exhaustive maximum-length search");
  search->add_option("d", search_args.d, "dimension")->required();
  search->add_option("k", search_args.k, "spread")->required();
  search->add_option("--phi", search_args.phi, "minimum maximum-bit-run r");
  search->add_flag("--symmetric", search_args.symmetric, "restrict to symmetric codes");
  search->add_option("--budget-nodes", search_args.budget_nodes, "node budget (default 1e8)");
  search->add_option("--budget-time", search_args.budget_time_seconds,
                     "time budget in seconds (default 600)");
  search->add_option("--seed-witness", search_args.seed_witness_path,
                     "code file used as the starting incumbent");
  search->add_option("--max-length", search_args.max_length,
                     "externally proven cap on the answer");

  cli::BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "all applicable bounds for (d, k)");
  bounds->add_option("d", bounds_args.d, "dimension")->required();
  bounds->add_option("k", bounds_args.k, "spread")->required();

  cli::ProjectArgs project_args;
  auto* project = app.add_subcommand("project", "delete one coordinate from a code");
  project->add_option("file", project_args.path, "code file")->required();
  project->add_option("label", project_args.label, "coordinate label to remove")->required();
  project->add_option("-o,--out", project_args.out_path, "write projected code file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitPreconditionError;
  }

  try {
    if (*verify) {
      verify_args.method = cli::method_from_name(method_name);
      return cli::cmd_verify(verify_args, std::cout);
    }
    if (*construct) {
      if (*family) construct_args.kind = cli::ConstructArgs::Kind::family;
      if (*builtin) construct_args.kind = cli::ConstructArgs::Kind::builtin;
      if (*projection) construct_args.kind = cli::ConstructArgs::Kind::projection;
      return cli::cmd_construct(construct_args, std::cout);
    }
    if (*search) return cli::cmd_search(search_args, std::cout);
    if (*bounds) return cli::cmd_bounds(bounds_args, std::cout);
    if (*project) return cli::cmd_project(project_args, std::cout);
  } catch (const ccodes::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kExitParseError;
  } catch (const ccodes::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return cli::kExitPreconditionError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitPreconditionError;
  }
  return cli::kExitOk;
}
