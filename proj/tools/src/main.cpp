#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "btlab/error.hpp"
#include "commands.hpp"

namespace {

using btlab::cli::RunConfig;

void add_building_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Dimension n >= 2")->check(CLI::Range(2U, 16U));
  sub->add_option("--p", cfg.p, "Prime p");
  sub->add_option("--radius", cfg.radius, "Ball radius");
  sub->add_option("--vertex-cap", cfg.vertex_cap, "Maximum vertices to generate");
}

void add_output_flags(CLI::App* sub, RunConfig& cfg, bool with_dot) {
  auto* format = sub->add_option("--format", cfg.format, "Output format");
  format->check(with_dot ? CLI::IsMember({"json", "dot", "summary"}) : CLI::IsMember({"json", "summary"}));
  sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
}

int exit_code_for(btlab::ErrorKind kind) {
  switch (kind) {
    case btlab::ErrorKind::ResourceBudgetExceeded:
    case btlab::ErrorKind::PrecisionOverflow:
      return btlab::cli::kBudgetExceeded;
    default:
      return btlab::cli::kInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* cap = std::getenv("BTLAB_VERTEX_CAP")) {
    try {
      cfg.vertex_cap = std::stoull(cap);
    } catch (const std::exception&) {
      std::cerr << "error: BTLAB_VERTEX_CAP is not a number\n";
      return btlab::cli::kInvalidInput;
    }
  }

  CLI::App app{"Finite balls of Bruhat-Tits buildings: generation, prints, replicas and local checks"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Generate a ball around the standard lattice class");
  add_building_flags(generate, cfg);
  add_output_flags(generate, cfg, true);

  auto* apartment = app.add_subcommand("apartment", "Diagonal apartment slice");
  add_building_flags(apartment, cfg);
  add_output_flags(apartment, cfg, true);

  auto* histogram = app.add_subcommand("histogram", "Vertex count per type");
  add_building_flags(histogram, cfg);
  add_output_flags(histogram, cfg, false);

  auto* print = app.add_subcommand("print", "Print of an interior vertex");
  add_building_flags(print, cfg);
  add_output_flags(print, cfg, false);
  print->add_option("--vertex", cfg.vertex, "Vertex id")->required();

  auto* source = app.add_subcommand("source", "Source of a member set");
  add_building_flags(source, cfg);
  add_output_flags(source, cfg, false);
  source->add_option("--members", cfg.members_file, "File with one vertex id per line")->required();

  auto* replica = app.add_subcommand("replica", "Build and verify the replica graph");
  add_building_flags(replica, cfg);
  add_output_flags(replica, cfg, true);
  replica->add_option("--kept", cfg.kept_types, "Kept types (comma separated, must contain 0)")->delimiter(',');

  auto* isocheck = app.add_subcommand("isocheck", "Root-preserving isometry of two rooted balls");
  add_building_flags(isocheck, cfg);
  add_output_flags(isocheck, cfg, false);
  isocheck->add_option("--graph", cfg.graph_file, "Edge list or ball JSON (default: generated ball)");
  isocheck->add_option("--other-graph", cfg.other_graph_file, "Second graph (default: the first)");
  isocheck->add_option("--root", cfg.root, "Root of the first ball");
  isocheck->add_option("--other-root", cfg.other_root, "Root of the second ball");
  isocheck->add_option("--r", cfg.ball_radius, "Radius of the compared balls");
  isocheck->add_flag("--labels", cfg.labels, "Require matching vertex labels");

  auto* locally = app.add_subcommand("locally", "Check every r-ball against a building ball");
  add_building_flags(locally, cfg);
  add_output_flags(locally, cfg, false);
  locally->add_option("--graph", cfg.graph_file, "Graph to test (default: generated ball)");
  locally->add_option("--r", cfg.ball_radius, "Ball radius r");
  locally->add_flag("--labels", cfg.labels, "Require matching vertex labels");

  auto* cover = app.add_subcommand("cover", "Verify that a vertex map is a covering");
  add_output_flags(cover, cfg, false);
  cover->add_option("--graph", cfg.graph_file, "Source graph")->required();
  cover->add_option("--target", cfg.target_file, "Target graph")->required();
  cover->add_option("--map", cfg.map_file, "Vertex map, one \"src dst\" per line")->required();
  cover->add_option("--boundary", cfg.boundary_file, "Source vertices checked for injectivity only");

  auto* pk = app.add_subcommand("pk", "Cycle complex, first homology and simple-connectedness verdict");
  add_building_flags(pk, cfg);
  add_output_flags(pk, cfg, false);
  pk->add_option("--graph", cfg.graph_file, "Graph (default: generated ball)");
  pk->add_option("--k", cfg.k, "Maximum cell length")->check(CLI::Range(3U, 64U));
  pk->add_option("--coset-cap", cfg.coset_cap, "Coset enumeration budget");

  auto* verify = app.add_subcommand("verify-paper", "Run the structural check suite on a generated ball");
  add_building_flags(verify, cfg);
  verify->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return btlab::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.output.empty()) return btlab::cli::run(cfg, std::cout);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return btlab::cli::kInvalidInput;
    }
    return btlab::cli::run(cfg, file);
  } catch (const btlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}
