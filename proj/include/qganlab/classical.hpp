#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qganlab/probability.hpp"
#include "qganlab/train.hpp"

namespace qgan {

/** Classical baseline on the same discrete-distribution task: a softmax
 *  generator over outcomes and a per-outcome logistic discriminator. */
struct ClassicalGanModel {
  std::vector<double> generator_logits;        // phi, length 2^n
  std::vector<double> discriminator_weights;   // w, length 2^n + 1; last entry is the bias
};

/** softmax(phi) with max-subtraction. */
ProbabilityVector classical_generator_probs(std::span<const double> phi);

/** sigmoid(w[outcome] + bias). */
double classical_discriminator(std::span<const double> w, std::size_t outcome);

/** Expectation-form losses; no sampling. */
double classical_loss_discriminator(const ClassicalGanModel& m, const ProbabilityVector& target);
double classical_loss_generator(const ClassicalGanModel& m);

/** Analytic gradients of the expectation-form losses. */
std::vector<double> classical_discriminator_grad(const ClassicalGanModel& m,
                                                 const ProbabilityVector& target);
std::vector<double> classical_generator_grad(const ClassicalGanModel& m);

/** Same alternating schedule, convergence rule, seeding, and result schema
 *  as the quantum train(). An explicit initial model may be supplied in
 *  place of the seeded uniform [-0.1, 0.1] initialization. */
TrainingResult train_classical(const TrainingConfig& config, const ProbabilityVector& target,
                               const std::optional<ClassicalGanModel>& initial = std::nullopt);

}  // namespace qgan
