#pragma once

#include <optional>
#include <string>

#include "pcsft/config.hpp"

namespace pcsft::cli {

enum class OutputFormat { Csv, Json };

struct CommandOutput {
  std::string body;
  /// Secondary document (the slope summary of `scaling` in CSV mode).
  std::optional<std::string> summary;
  bool passed = true;
};

/// Exit codes of the command-line runner.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;

CommandOutput cmd_verify(const ExperimentConfig& cfg, OutputFormat format);
CommandOutput cmd_correspondence(const ExperimentConfig& cfg, OutputFormat format);
CommandOutput cmd_scaling(const ExperimentConfig& cfg, OutputFormat format);
CommandOutput cmd_dynamics(const ExperimentConfig& cfg, OutputFormat format);
CommandOutput cmd_ensemble(const ExperimentConfig& cfg, OutputFormat format);

}  // namespace pcsft::cli
