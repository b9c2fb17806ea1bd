#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

namespace btlab::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kInvalidInput = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string command;
  unsigned n = 2;
  std::uint64_t p = 2;
  unsigned radius = 2;
  std::set<int> kept_types{0};
  std::size_t vertex_cap = 1'000'000;
  std::size_t coset_cap = 100'000;
  std::string format = "summary";
  std::string output;
  std::uint64_t seed = 1;

  // Subcommand inputs.
  std::optional<unsigned> vertex;
  std::string members_file;
  std::string graph_file;
  std::string other_graph_file;
  std::string target_file;
  std::string map_file;
  std::string boundary_file;
  unsigned root = 0;
  unsigned other_root = 0;
  unsigned ball_radius = 1;
  unsigned k = 3;
  bool labels = false;
};

/// Runs one subcommand, writing the artifact to `out`; returns the exit code.
int run(const RunConfig& config, std::ostream& out);

}  // namespace btlab::cli
