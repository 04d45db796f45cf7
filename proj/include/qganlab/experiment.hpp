#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qganlab/train.hpp"

namespace qgan {

/** Everything a training run needs, plus the sweep axes: target, methods,
 *  lambda sweep, seed list, output directory. */
struct ExperimentConfig {
  TrainingConfig training;
  std::optional<std::vector<double>> target_inline;
  std::optional<std::string> target_file;
  std::vector<std::string> methods{"classical", "qgan"};
  std::vector<double> lambda_sweep{0.0};
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path output_dir = "out";
};

/** Parse a flat `key = value` config file. `#` starts a comment; lists are
 *  comma-separated. Unknown keys are rejected; absent keys take the training
 *  defaults. Throws ConfigError (syntax errors carry the line number) or
 *  IoError. */
ExperimentConfig parse_config(const std::filesystem::path& path);

ProbabilityVector resolve_target(const ExperimentConfig& config);

/** Run one method (config.methods must name exactly one) over the seed list
 *  with the configured lambda_g/lambda_d. Writes per-run CSV histories and a
 *  report.json. Returns a process exit code. */
int run_train(const ExperimentConfig& config);

/** Full sweep: every (method, lambda, seed) combination — classical once per
 *  seed, qgan once per (lambda, seed). Writes `<method>_<lambda>_<seed>.csv`
 *  per run plus report.json. Exit codes: 0 success, 2 numeric failure in any
 *  run (the others are still written), 3 I/O failure. */
int run_compare(const ExperimentConfig& config);

}  // namespace qgan
