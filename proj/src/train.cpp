#include "qganlab/train.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "qganlab/errors.hpp"
#include "qganlab/finite_difference.hpp"
#include "qganlab/metrics.hpp"
#include "qganlab/rng.hpp"

namespace qgan {

void validate_training_config(const TrainingConfig& config) {
  if (config.n_qubits < 1 || config.n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must lie in [1, " + std::to_string(kMaxQubits) + "] (got " +
                      std::to_string(config.n_qubits) + ")");
  }
  auto check_range = [](const char* name, double value, double lo, double hi, bool lo_open) {
    const bool ok = std::isfinite(value) && (lo_open ? value > lo : value >= lo) && value <= hi;
    if (!ok) {
      throw ConfigError(std::string(name) + " must lie in " + (lo_open ? "(" : "[") +
                        std::to_string(lo) + ", " + std::to_string(hi) + "] (got " +
                        std::to_string(value) + ")");
    }
  };
  check_range("learning_rate_g", config.learning_rate_g, 0.0, 10.0, true);
  check_range("learning_rate_d", config.learning_rate_d, 0.0, 10.0, true);
  check_range("fd_step", config.fd_step, 0.0, 1e-1, true);
  if (!(config.epsilon > 0.0) || !(config.epsilon < 1.0)) {
    throw ConfigError("epsilon must lie in (0, 1) (got " + std::to_string(config.epsilon) + ")");
  }
  if (config.max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (config.d_steps_per_g_step < 1) throw ConfigError("d_steps_per_g_step must be >= 1");
  if (config.patience < 1) throw ConfigError("patience must be >= 1");
  if (config.lambda_g < 0.0 || !std::isfinite(config.lambda_g)) {
    throw ConfigError("lambda_g must be finite and >= 0");
  }
  if (config.lambda_d < 0.0 || !std::isfinite(config.lambda_d)) {
    throw ConfigError("lambda_d must be finite and >= 0");
  }
  if (!std::isfinite(config.evolution_time)) throw ConfigError("evolution_time must be finite");
}

TrainingResult train(const TrainingConfig& config, const ProbabilityVector& target) {
  validate_training_config(config);
  const std::size_t expected = std::size_t(1) << config.n_qubits;
  if (target.size() != expected) {
    throw ConfigError("target has " + std::to_string(target.size()) + " entries, expected " +
                      std::to_string(expected) + " for " + std::to_string(config.n_qubits) +
                      " qubit(s)");
  }

  const DensityMatrix rho_r = encode_distribution(target);
  GeneratorModel g = make_generator(config.n_qubits, parse_ansatz(config.generator_ansatz, config.n_qubits),
                                    config.lambda_g, config.evolution_time);
  DiscriminatorModel d =
      make_discriminator(config.n_qubits, parse_ansatz(config.discriminator_ansatz, config.n_qubits),
                         config.lambda_d, config.evolution_time);

  Rng rng(config.seed);
  std::vector<double> theta_g(g.spec.base_terms.size());
  std::vector<double> theta_d(d.spec.base_terms.size());
  for (double& t : theta_g) t = rng.uniform(-0.1, 0.1);
  for (double& t : theta_d) t = rng.uniform(-0.1, 0.1);
  set_parameters(g.spec, theta_g);
  set_parameters(d.spec, theta_d);

  const bool literal = config.objective_mode == ObjectiveMode::kLiteral;

  TrainingResult result;
  result.history.reserve(static_cast<std::size_t>(config.max_iterations));
  int streak = 0;
  std::string error;

  for (int iteration = 1; iteration <= config.max_iterations && error.empty(); ++iteration) {
    const auto started = std::chrono::steady_clock::now();
    try {
      // discriminator ascent against the frozen generator
      DensityMatrix rho_g_data = generated_data_state(g);
      for (int s = 0; s < config.d_steps_per_g_step; ++s) {
        auto objective_d = [&](const std::vector<double>& theta) {
          DiscriminatorModel probe = d;
          set_parameters(probe.spec, theta);
          return literal ? objective_literal(rho_r, g, probe)
                         : discriminator_objective(probe, rho_r, rho_g_data);
        };
        const std::vector<double> grad = fd_gradient(objective_d, theta_d, config.fd_step);
        for (std::size_t k = 0; k < theta_d.size(); ++k) {
          theta_d[k] += config.learning_rate_d * grad[k];
        }
        set_parameters(d.spec, theta_d);
      }
      // one generator descent step
      auto objective_g = [&](const std::vector<double>& theta) {
        GeneratorModel probe = g;
        set_parameters(probe.spec, theta);
        return literal ? objective_literal(rho_r, probe, d) : loss_generator(probe, d);
      };
      const std::vector<double> grad = fd_gradient(objective_g, theta_g, config.fd_step);
      for (std::size_t k = 0; k < theta_g.size(); ++k) {
        theta_g[k] -= config.learning_rate_g * grad[k];
      }
      set_parameters(g.spec, theta_g);

      const DensityMatrix rho_g = generate(g);
      const ProbabilityVector p_g = measure_probabilities(rho_g);
      IterationRecord record;
      record.iteration = iteration;
      if (literal) {
        const double objective = objective_literal(rho_r, g, d);
        record.loss_g = objective;
        record.loss_d = -objective;
      } else {
        record.loss_g = loss_generator(g, d);
        record.loss_d = loss_discriminator(rho_r, g, d);
      }
      record.tv_to_target = tv_distance(p_g, target);
      record.fidelity_to_target = fidelity(rho_g, rho_r);
      record.wall_time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      result.history.push_back(record);

      streak = record.tv_to_target < config.epsilon ? streak + 1 : 0;
      if (streak >= config.patience) {
        result.converged = true;
        result.iterations_to_convergence = iteration;
        break;
      }
    } catch (const NumericError& e) {
      error = e.what();
    }
  }

  result.error = error;
  try {
    result.final_generated = measure_probabilities(generate(g)).probs();
  } catch (const std::exception&) {
    // aborted run with an unusable final state; leave final_generated empty
  }
  return result;
}

GridSearchResult grid_search_discriminator(const DensityMatrix& rho_r, const DensityMatrix& rho_g,
                                           const std::vector<PauliString>& ansatz, int grid_steps,
                                           double evolution_time) {
  if (ansatz.empty() || ansatz.size() > 2) {
    throw SpecError("grid_search_discriminator supports 1 or 2 trainable parameters, got " +
                    std::to_string(ansatz.size()));
  }
  if (grid_steps < 11) throw SpecError("grid_steps must be >= 11");
  if (rho_r.dim() != rho_g.dim()) throw DimensionError("grid search: state dimension mismatch");
  const int n_qubits = ansatz.front().n_qubits();
  DiscriminatorModel d = make_discriminator(n_qubits, ansatz, 0.0, evolution_time);
  d.spec.enhancement_terms.clear();

  const double lo = -std::numbers::pi;
  const double hi = std::numbers::pi;
  auto grid_value = [&](int i) { return lo + (hi - lo) * static_cast<double>(i) / (grid_steps - 1); };

  GridSearchResult best{std::vector<double>(ansatz.size(), 0.0),
                        -std::numeric_limits<double>::infinity()};
  std::vector<double> theta(ansatz.size(), 0.0);
  auto consider = [&]() {
    set_parameters(d.spec, theta);
    const double objective = discriminator_objective(d, rho_r, rho_g);
    // values tied within numerical resolution keep the first scanned point
    if (objective > best.best_objective + 1e-12) best = {theta, objective};
  };
  if (ansatz.size() == 1) {
    for (int i = 0; i < grid_steps; ++i) {
      theta[0] = grid_value(i);
      consider();
    }
  } else {
    for (int i = 0; i < grid_steps; ++i) {
      for (int j = 0; j < grid_steps; ++j) {
        theta[0] = grid_value(i);
        theta[1] = grid_value(j);
        consider();
      }
    }
  }
  return best;
}

double train_discriminator(const DensityMatrix& rho_r, const DensityMatrix& rho_g,
                           DiscriminatorModel& d, double learning_rate, double fd_step, int steps) {
  std::vector<double> theta = get_parameters(d.spec);
  for (int s = 0; s < steps; ++s) {
    auto objective = [&](const std::vector<double>& probe_theta) {
      DiscriminatorModel probe = d;
      set_parameters(probe.spec, probe_theta);
      return discriminator_objective(probe, rho_r, rho_g);
    };
    const std::vector<double> grad = fd_gradient(objective, theta, fd_step);
    for (std::size_t k = 0; k < theta.size(); ++k) theta[k] += learning_rate * grad[k];
    set_parameters(d.spec, theta);
  }
  return discriminator_objective(d, rho_r, rho_g);
}

}  // namespace qgan
