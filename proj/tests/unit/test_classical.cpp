#include <cmath>

#include "doctest.h"

#include "../reference_fixtures.hpp"
#include "qganlab/classical.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/finite_difference.hpp"
#include "qganlab/rng.hpp"

using namespace qgan;

TEST_CASE("softmax generator examples") {
  CHECK(classical_generator_probs(std::vector<double>{0.0, 0.0}).probs() ==
        std::vector<double>{0.5, 0.5});

  const auto skewed = classical_generator_probs(std::vector<double>{std::log(3.0), 0.0});
  CHECK(skewed[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(skewed[1] == doctest::Approx(0.25).epsilon(1e-12));

  const std::vector<double> phi{0.4, -1.2, 0.9};
  std::vector<double> shifted = phi;
  for (double& v : shifted) v += 7.5;
  const auto p = classical_generator_probs(phi);
  const auto q = classical_generator_probs(shifted);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(p[i] - q[i]) < 1e-12);
}

TEST_CASE("logistic discriminator examples") {
  const std::vector<double> zeros{0.0, 0.0, 0.0};
  CHECK(classical_discriminator(zeros, 0) == 0.5);
  CHECK(classical_discriminator(zeros, 1) == 0.5);

  const std::vector<double> spiked{10.0, 0.0, 0.0};
  CHECK(classical_discriminator(spiked, 0) == doctest::Approx(0.99995).epsilon(1e-4));

  const std::vector<double> bias_only{0.0, 0.0, 1.3};
  const double expected = 1.0 / (1.0 + std::exp(-1.3));
  CHECK(classical_discriminator(bias_only, 0) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(classical_discriminator(bias_only, 1) == doctest::Approx(expected).epsilon(1e-15));

  CHECK_THROWS_AS(classical_discriminator(zeros, 2), SpecError);
}

TEST_CASE("a zero-initialized generator on the uniform target converges immediately") {
  TrainingConfig config;
  config.n_qubits = 1;
  config.patience = 1;
  ClassicalGanModel init{{0.0, 0.0}, {0.0, 0.0, 0.0}};
  const TrainingResult result = train_classical(config, ProbabilityVector({0.5, 0.5}), init);
  CHECK(result.converged);
  CHECK(result.iterations_to_convergence == 1);
  CHECK(result.history.front().tv_to_target == 0.0);
}

TEST_CASE("classical training matches the reference run") {
  TrainingConfig config;
  config.n_qubits = 1;
  config.seed = 1;
  const TrainingResult result = train_classical(config, ProbabilityVector({0.75, 0.25}));
  CHECK(result.converged);
  REQUIRE(result.iterations_to_convergence.has_value());
  CHECK(*result.iterations_to_convergence == fixtures::kClassicalSeed1Iterations);
}

TEST_CASE("classical training is deterministic") {
  TrainingConfig config;
  config.n_qubits = 2;
  config.max_iterations = 80;
  config.patience = 80;
  config.seed = 23;
  const ProbabilityVector target({0.4, 0.1, 0.2, 0.3});
  const TrainingResult a = train_classical(config, target);
  const TrainingResult b = train_classical(config, target);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].tv_to_target == b.history[i].tv_to_target);
    CHECK(a.history[i].loss_g == b.history[i].loss_g);
  }
}

TEST_CASE("analytic gradients agree with finite differences") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4;
    ClassicalGanModel m;
    m.generator_logits.resize(n);
    m.discriminator_weights.resize(n + 1);
    for (double& v : m.generator_logits) v = rng.uniform(-1.0, 1.0);
    for (double& v : m.discriminator_weights) v = rng.uniform(-1.0, 1.0);
    std::vector<double> t(n);
    double sum = 0.0;
    for (double& v : t) {
      v = rng.uniform(0.1, 1.0);
      sum += v;
    }
    for (double& v : t) v /= sum;
    const ProbabilityVector target(t);

    const auto analytic_g = classical_generator_grad(m);
    const auto fd_g = fd_gradient(
        [&](const std::vector<double>& phi) {
          ClassicalGanModel probe = m;
          probe.generator_logits = phi;
          return classical_loss_generator(probe);
        },
        m.generator_logits, 1e-5);
    const auto analytic_d = classical_discriminator_grad(m, target);
    const auto fd_d = fd_gradient(
        [&](const std::vector<double>& w) {
          ClassicalGanModel probe = m;
          probe.discriminator_weights = w;
          return classical_loss_discriminator(probe, target);
        },
        m.discriminator_weights, 1e-5);

    auto rel = [](const std::vector<double>& a, const std::vector<double>& b) {
      double diff = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
      }
      return diff / std::max(scale, 1e-9);
    };
    CHECK(rel(analytic_g, fd_g) < 1e-5);
    CHECK(rel(analytic_d, fd_d) < 1e-5);
  }
}
