#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btlab/building.hpp"

namespace btlab::conformance {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t equivariance_samples = 50;
  /// The 2-complex check is skipped on balls larger than this.
  std::size_t pk_vertex_limit = 2500;
};

/// Runs every structural check that applies to the ball's parameters, in a
/// fixed order. Output depends only on the ball and the options.
std::vector<CheckResult> run_suite(const BuildingBall& ball, const SuiteOptions& options = {});

}  // namespace btlab::conformance
