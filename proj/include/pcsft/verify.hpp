#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcsft/gaussian_state.hpp"

namespace pcsft {

struct VerifyOptions {
  Index n = 4;
  double h = 0.01;
  std::uint64_t seed = 42;
  std::size_t trials = 20;
  std::size_t samples = 100000;
  MonteCarloOptions mc;
  /// Configured state; its invariance is checked against the expectation below.
  std::optional<GaussianStated> state;
  /// When set, the configured state is expected to be non-invariant.
  bool negative_control = false;
};

struct CheckResult {
  std::string check;
  bool passed = false;
  double max_residual = 0;
  double threshold = 0;
  std::string detail;
};

/// Runs every structural, dynamical and correspondence property at the
/// configured dimension. Deterministic in the options.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace pcsft
