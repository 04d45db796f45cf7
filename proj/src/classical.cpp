#include "qganlab/classical.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/metrics.hpp"
#include "qganlab/rng.hpp"

namespace qgan {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double clamp_score(double s) { return std::clamp(s, kScoreClampLo, kScoreClampHi); }

/// Bhattacharyya-coefficient-squared; equals the quantum fidelity of the
/// diagonal encodings.
double distribution_fidelity(const ProbabilityVector& p, const ProbabilityVector& q) {
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
  return std::min(bc * bc, 1.0);
}

}  // namespace

ProbabilityVector classical_generator_probs(std::span<const double> phi) {
  if (phi.empty()) throw SpecError("generator logits must be nonempty");
  double max_logit = phi[0];
  for (double v : phi) {
    if (!std::isfinite(v)) throw NumericError("generator logit is not finite");
    max_logit = std::max(max_logit, v);
  }
  std::vector<double> p(phi.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    p[i] = std::exp(phi[i] - max_logit);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return ProbabilityVector(std::move(p));
}

double classical_discriminator(std::span<const double> w, std::size_t outcome) {
  if (w.size() < 2) throw SpecError("discriminator weights must hold at least one outcome plus a bias");
  if (outcome + 1 >= w.size()) {
    throw SpecError("outcome " + std::to_string(outcome) + " out of range for " +
                    std::to_string(w.size() - 1) + " outcomes");
  }
  return sigmoid(w[outcome] + w[w.size() - 1]);
}

double classical_loss_discriminator(const ClassicalGanModel& m, const ProbabilityVector& target) {
  const ProbabilityVector p_g = classical_generator_probs(m.generator_logits);
  double loss = 0.0;
  for (std::size_t x = 0; x < target.size(); ++x) {
    const double d = clamp_score(classical_discriminator(m.discriminator_weights, x));
    loss += -target[x] * std::log(d) - p_g[x] * std::log(1.0 - d);
  }
  return loss;
}

double classical_loss_generator(const ClassicalGanModel& m) {
  const ProbabilityVector p_g = classical_generator_probs(m.generator_logits);
  double loss = 0.0;
  for (std::size_t x = 0; x < p_g.size(); ++x) {
    const double d = clamp_score(classical_discriminator(m.discriminator_weights, x));
    loss += -p_g[x] * std::log(d);
  }
  return loss;
}

std::vector<double> classical_discriminator_grad(const ClassicalGanModel& m,
                                                 const ProbabilityVector& target) {
  const ProbabilityVector p_g = classical_generator_probs(m.generator_logits);
  const std::size_t n = target.size();
  std::vector<double> grad(n + 1, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    const double d = classical_discriminator(m.discriminator_weights, x);
    grad[x] = -target[x] * (1.0 - d) + p_g[x] * d;
    grad[n] += grad[x];
  }
  return grad;
}

std::vector<double> classical_generator_grad(const ClassicalGanModel& m) {
  const ProbabilityVector p_g = classical_generator_probs(m.generator_logits);
  const std::size_t n = p_g.size();
  std::vector<double> log_d(n);
  double expected_log_d = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    log_d[x] = std::log(clamp_score(classical_discriminator(m.discriminator_weights, x)));
    expected_log_d += p_g[x] * log_d[x];
  }
  std::vector<double> grad(n);
  for (std::size_t k = 0; k < n; ++k) grad[k] = -p_g[k] * (log_d[k] - expected_log_d);
  return grad;
}

TrainingResult train_classical(const TrainingConfig& config, const ProbabilityVector& target,
                               const std::optional<ClassicalGanModel>& initial) {
  validate_training_config(config);
  const std::size_t n = std::size_t(1) << config.n_qubits;
  if (target.size() != n) {
    throw ConfigError("target has " + std::to_string(target.size()) + " entries, expected " +
                      std::to_string(n) + " for " + std::to_string(config.n_qubits) + " qubit(s)");
  }

  ClassicalGanModel m;
  if (initial) {
    if (initial->generator_logits.size() != n || initial->discriminator_weights.size() != n + 1) {
      throw ConfigError("initial classical model has wrong parameter lengths");
    }
    m = *initial;
  } else {
    Rng rng(config.seed);
    m.generator_logits.resize(n);
    m.discriminator_weights.resize(n + 1);
    for (double& v : m.generator_logits) v = rng.uniform(-0.1, 0.1);
    for (double& v : m.discriminator_weights) v = rng.uniform(-0.1, 0.1);
  }

  const DensityMatrix rho_r = encode_distribution(target);
  TrainingResult result;
  result.history.reserve(static_cast<std::size_t>(config.max_iterations));
  int streak = 0;
  std::string error;

  for (int iteration = 1; iteration <= config.max_iterations && error.empty(); ++iteration) {
    const auto started = std::chrono::steady_clock::now();
    try {
      for (int s = 0; s < config.d_steps_per_g_step; ++s) {
        const std::vector<double> grad = classical_discriminator_grad(m, target);
        for (std::size_t k = 0; k < grad.size(); ++k) {
          m.discriminator_weights[k] -= config.learning_rate_d * grad[k];
        }
      }
      const std::vector<double> grad = classical_generator_grad(m);
      for (std::size_t k = 0; k < grad.size(); ++k) {
        m.generator_logits[k] -= config.learning_rate_g * grad[k];
      }

      const ProbabilityVector p_g = classical_generator_probs(m.generator_logits);
      IterationRecord record;
      record.iteration = iteration;
      record.loss_g = classical_loss_generator(m);
      record.loss_d = classical_loss_discriminator(m, target);
      record.tv_to_target = tv_distance(p_g, target);
      record.fidelity_to_target = distribution_fidelity(p_g, target);
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
    result.final_generated = classical_generator_probs(m.generator_logits).probs();
  } catch (const std::exception&) {
    // keep empty on an unusable final state
  }
  return result;
}

}  // namespace qgan
