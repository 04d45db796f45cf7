#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qganlab/models.hpp"
#include "qganlab/probability.hpp"

namespace qgan {

enum class ObjectiveMode { kProbabilistic, kLiteral };

/** Full description of one adversarial training run. */
struct TrainingConfig {
  int n_qubits = 1;
  std::string generator_ansatz = "default";
  std::string discriminator_ansatz = "default";
  double lambda_g = 0.0;
  double lambda_d = 0.0;
  ObjectiveMode objective_mode = ObjectiveMode::kProbabilistic;
  double learning_rate_g = 0.05;
  double learning_rate_d = 0.05;
  double fd_step = 1e-4;
  int max_iterations = 5000;
  int d_steps_per_g_step = 1;
  double epsilon = 0.01;
  int patience = 10;
  std::uint64_t seed = 1;
  double evolution_time = 1.0;
};

/** Throws ConfigError naming the offending field. */
void validate_training_config(const TrainingConfig& config);

struct IterationRecord {
  int iteration;  // 1-based
  double loss_g;
  double loss_d;
  double tv_to_target;
  double fidelity_to_target;
  double wall_time_ms;
};

struct TrainingResult {
  std::vector<IterationRecord> history;
  bool converged = false;
  std::optional<int> iterations_to_convergence;
  std::vector<double> final_generated;
  /// Non-empty if a numeric failure aborted the run; history is then partial.
  std::string error;
};

/** Alternating minimax training: per iteration, d_steps_per_g_step ascent
 *  steps on the discriminator objective, then one descent step on the
 *  generator objective, both via central finite differences. Convergence is
 *  declared once tv_to_target stays below epsilon for `patience` consecutive
 *  iterations. Deterministic given the seed; wall_time_ms is the only
 *  nondeterministic output field. */
TrainingResult train(const TrainingConfig& config, const ProbabilityVector& target);

struct GridSearchResult {
  std::vector<double> best_theta;
  double best_objective;
};

/** Brute-force oracle: exhaustively evaluates the discriminator objective on
 *  a uniform grid over [-pi, pi]^d for an ansatz with d <= 2 trainable
 *  parameters (lambda = 0). First maximum in row-major scan order wins. */
GridSearchResult grid_search_discriminator(const DensityMatrix& rho_r, const DensityMatrix& rho_g,
                                           const std::vector<PauliString>& ansatz, int grid_steps,
                                           double evolution_time = 1.0);

/** Discriminator-only ascent against a frozen pair of states, using the same
 *  finite-difference step rule as train(). Returns the final objective. */
double train_discriminator(const DensityMatrix& rho_r, const DensityMatrix& rho_g,
                           DiscriminatorModel& d, double learning_rate, double fd_step, int steps);

}  // namespace qgan
