#include <cmath>
#include <numbers>

#include "doctest.h"

#include "../reference_fixtures.hpp"
#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/metrics.hpp"
#include "qganlab/train.hpp"

using namespace qgan;

namespace {

TrainingConfig one_qubit_config(const std::string& ansatz) {
  TrainingConfig config;
  config.n_qubits = 1;
  config.generator_ansatz = ansatz;
  config.discriminator_ansatz = ansatz;
  return config;
}

}  // namespace

TEST_CASE("training learns a pure basis target with a Y ansatz") {
  TrainingConfig config = one_qubit_config("Y");
  config.seed = 3;
  const TrainingResult result = train(config, ProbabilityVector({1.0, 0.0}));
  CHECK(result.converged);
  CHECK(result.history.back().tv_to_target < 0.01);
}

TEST_CASE("training on the asymmetric target matches the reference run") {
  TrainingConfig config = one_qubit_config("X,Y,Z");
  config.seed = 1;
  const TrainingResult result = train(config, ProbabilityVector({0.75, 0.25}));
  CHECK(result.converged);
  REQUIRE(result.iterations_to_convergence.has_value());
  CHECK(*result.iterations_to_convergence == fixtures::kTrainXyzSeed1Iterations);
}

TEST_CASE("training is deterministic given the seed") {
  TrainingConfig config = one_qubit_config("default");
  config.max_iterations = 60;
  config.patience = 60;
  config.seed = 17;
  const ProbabilityVector target({0.75, 0.25});
  const TrainingResult a = train(config, target);
  const TrainingResult b = train(config, target);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].loss_g == b.history[i].loss_g);
    CHECK(a.history[i].loss_d == b.history[i].loss_d);
    CHECK(a.history[i].tv_to_target == b.history[i].tv_to_target);
    CHECK(a.history[i].fidelity_to_target == b.history[i].fidelity_to_target);
  }
  CHECK(a.final_generated == b.final_generated);
  CHECK(a.converged == b.converged);
}

TEST_CASE("recorded convergence matches the metrics definition") {
  TrainingConfig config = one_qubit_config("default");
  config.seed = 4;
  const TrainingResult result = train(config, ProbabilityVector({0.75, 0.25}));
  REQUIRE(result.converged);
  std::vector<double> tv;
  for (const IterationRecord& r : result.history) tv.push_back(r.tv_to_target);
  const auto recomputed = iterations_to_convergence(tv, config.epsilon, config.patience);
  REQUIRE(recomputed.has_value());
  CHECK(*recomputed == *result.iterations_to_convergence);
  CHECK(result.history.size() == static_cast<std::size_t>(*result.iterations_to_convergence));
  CHECK(result.history.size() <= static_cast<std::size_t>(config.max_iterations));
}

TEST_CASE("literal mode trains without numeric failures") {
  TrainingConfig config = one_qubit_config("default");
  config.objective_mode = ObjectiveMode::kLiteral;
  config.max_iterations = 50;
  config.patience = 50;
  const TrainingResult result = train(config, ProbabilityVector({0.75, 0.25}));
  CHECK(result.error.empty());
  CHECK(result.history.size() == 50);
  for (const IterationRecord& r : result.history) {
    CHECK(std::isfinite(r.loss_g));
    CHECK(r.loss_d == -r.loss_g);  // the same objective, ascended and descended
  }
}

TEST_CASE("config validation names the offending field") {
  TrainingConfig config = one_qubit_config("default");
  config.epsilon = 1.5;
  try {
    train(config, ProbabilityVector({0.75, 0.25}));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
  config = one_qubit_config("default");
  config.fd_step = 0.5;
  CHECK_THROWS_AS(train(config, ProbabilityVector({0.75, 0.25})), ConfigError);
  config = one_qubit_config("default");
  CHECK_THROWS_AS(train(config, ProbabilityVector({0.5, 0.25, 0.25})), ConfigError);
}

TEST_CASE("grid search ties break toward the first grid point") {
  // maximally mixed pair: the objective is theta-independent
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  const GridSearchResult r =
      grid_search_discriminator(mixed, mixed, {PauliString("X"), PauliString("Z")}, 11);
  CHECK(r.best_theta[0] == doctest::Approx(-std::numbers::pi).epsilon(1e-15));
  CHECK(r.best_theta[1] == doctest::Approx(-std::numbers::pi).epsilon(1e-15));
  CHECK(r.best_objective == doctest::Approx(2.0 * std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("grid search finds the separating rotation") {
  const DensityMatrix rho_r = DensityMatrix::computational_basis_state(1, 0);
  const DensityMatrix rho_g = DensityMatrix::computational_basis_state(1, 1);
  const GridSearchResult r = grid_search_discriminator(rho_r, rho_g, {PauliString("X")}, 101);
  // the X-rotation scores are cos^2(theta) / sin^2(theta); the optimum acts
  // as the identity (theta in {-pi, 0, pi} are exactly tied), with
  // D(rho_r) = 1 and D(rho_g) = 0 — the first tied grid point is returned
  CHECK(std::abs(std::cos(r.best_theta[0])) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.best_objective == doctest::Approx(2.0 * std::log(1.0 - 1e-9)).epsilon(1e-6));
  DiscriminatorModel d = make_discriminator(1, {PauliString("X")}, 0.0);
  set_parameters(d.spec, r.best_theta);
  CHECK(discriminate(d, rho_r) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(discriminate(d, rho_g) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("grid search validates its inputs") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  CHECK_THROWS_AS(grid_search_discriminator(
                      mixed, mixed, {PauliString("X"), PauliString("Y"), PauliString("Z")}, 101),
                  SpecError);
  CHECK_THROWS_AS(grid_search_discriminator(mixed, mixed, {PauliString("X")}, 5), SpecError);
}

TEST_CASE("gradient-trained discriminator reaches the grid optimum") {
  const DensityMatrix rho_r = encode_distribution(ProbabilityVector({0.25, 0.75}));
  const DensityMatrix rho_g = encode_distribution(ProbabilityVector({0.9, 0.1}));
  const std::vector<PauliString> ansatz = {PauliString("X"), PauliString("Z")};
  const GridSearchResult oracle = grid_search_discriminator(rho_r, rho_g, ansatz, 101);
  DiscriminatorModel d = make_discriminator(1, ansatz, 0.0);
  set_parameters(d.spec, {0.05, -0.02});
  const double trained = train_discriminator(rho_r, rho_g, d, 0.05, 1e-4, 2000);
  CHECK(oracle.best_objective - trained <= 0.05);
}
