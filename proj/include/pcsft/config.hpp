#pragma once

// Experiment configuration for the command-line runner. A config is a single
// JSON document; parse_config resolves it (including seeded random
// shortcuts) into fully built objects before any computation runs.
//
//   {
//     "n": 4, "h": 0.01, "seed": 42,
//     "state": {"maximally_mixed": true} | {"pure": {...}} | {"Bc": {...}} | {"B": [[...]]},
//     "generator": {"harmonic": {"k": 1}} | {"random_scommuting": {"scale": 1}}
//                | {"random_symmetric": {"scale": 1}} | {"matrix": <operator>}
//                | {"scommuting": {"D": [[...]], "S": [[...]]}},
//     "variable": {"terms": [{"coefficient": 1, "factors": ["identity", ...]}]},
//     "point": {"q": [...], "p": [...]},
//     "samples": 100000, "partitions": 8, "threads": 1, "trials": 20,
//     "times": [0, 0.5, 1] | {"start": 0, "stop": 1, "steps": 11},
//     "h_grid": [0.1, 0.01, 0.001, 0.0001],
//     "negative_control": false
//   }
//
// Variable factors accept "identity", {"harmonic": {"k": k}},
// {"scommuting": {"D", "S"}}, {"random_scommuting": {"scale": s}},
// {"random_positive": {"scale": s}} or a full operator object.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcsft/io.hpp"
#include "pcsft/polynomial_variable.hpp"
#include "pcsft/random.hpp"

namespace pcsft::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Index n = 4;
  double h = 0.01;
  std::uint64_t seed = 42;
  std::string state_kind = "maximally_mixed";
  GaussianStated state;
  std::string generator_kind = "harmonic";
  BlockOperatord generator;
  PolynomialVariabled variable;
  std::optional<PhaseVectord> point;
  std::size_t samples = 100000;
  std::size_t trials = 20;
  MonteCarloOptions mc;
  std::vector<double> times;
  std::vector<double> h_grid;
  bool negative_control = false;
};

ExperimentConfig parse_config(const io::json& doc, std::optional<std::uint64_t> seed_override = {});

/// Reads and parses a config file; syntax errors report line and column.
ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override = {});

}  // namespace pcsft::cli
