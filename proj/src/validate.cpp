#include "qganlab/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qganlab/classical.hpp"
#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/experiment.hpp"
#include "qganlab/finite_difference.hpp"
#include "qganlab/history_io.hpp"
#include "qganlab/metrics.hpp"
#include "qganlab/models.hpp"
#include "qganlab/rng.hpp"
#include "qganlab/train.hpp"

namespace qgan {

namespace {

ComplexMatrix random_hermitian(Rng& rng, Eigen::Index dim, double max_entry) {
  ComplexMatrix a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  // Gershgorin bound keeps both the spectral norm and every entry <= max_entry
  double radius = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) row += std::abs(h(i, j));
    radius = std::max(radius, row);
  }
  return h * (max_entry / radius);
}

/// Full-rank random state, A A† normalized.
DensityMatrix random_density_matrix(Rng& rng, Eigen::Index dim) {
  ComplexMatrix a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  ComplexMatrix rho = a * a.adjoint();
  return DensityMatrix(rho / rho.trace().real());
}

ProbabilityVector random_distribution(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = rng.uniform(0.0, 1.0) + 1e-3;
    sum += v;
  }
  for (double& v : p) v /= sum;
  return ProbabilityVector(std::move(p));
}

HamiltonianSpec random_spec(Rng& rng, int n_qubits) {
  HamiltonianSpec spec;
  spec.n_qubits = n_qubits;
  const int n_terms = 2 + static_cast<int>(rng.next_bits() % 3);
  for (int k = 0; k < n_terms; ++k) {
    std::vector<Pauli> ops;
    for (int q = 0; q < n_qubits; ++q) {
      ops.push_back(static_cast<Pauli>(rng.next_bits() % 4));
    }
    spec.base_terms.push_back({rng.uniform(-2.0, 2.0), PauliString(std::move(ops))});
  }
  spec.enhancement_terms = default_enhancement(n_qubits);
  spec.lambda = rng.uniform(0.0, 1.0);
  return spec;
}

/// Truncated Taylor series sum_{k<=terms} (-iHt)^k / k!; the oracle route,
/// independent of the eigendecomposition path.
ComplexMatrix taylor_exponential(const ComplexMatrix& h, double t, int terms) {
  const Eigen::Index dim = h.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix term = ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix step = Complex(0.0, -t) * h;
  for (int k = 1; k <= terms; ++k) {
    term = term * step / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double max_abs_vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_vec(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, const std::function<void()>& body) {
    try {
      body();
      results.push_back({name, true, ""});
    } catch (const std::exception& e) {
      results.push_back({name, false, e.what()});
    }
  }
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw NumericError(detail);
}

TrainingConfig short_training_config() {
  TrainingConfig config;
  config.n_qubits = 1;
  config.generator_ansatz = "X,Z";
  config.discriminator_ansatz = "X,Z";
  config.max_iterations = 40;
  config.patience = 40;  // no early stop within the window
  config.seed = 11;
  return config;
}

bool histories_identical(const std::vector<IterationRecord>& a, const std::vector<IterationRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // wall_time_ms is the one nondeterministic field
    if (a[i].iteration != b[i].iteration || a[i].loss_g != b[i].loss_g || a[i].loss_d != b[i].loss_d ||
        a[i].tv_to_target != b[i].tv_to_target || a[i].fidelity_to_target != b[i].fidelity_to_target) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options) {
  Suite suite;

  suite.check("hamiltonian assembly hermiticity", [&] {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 3);
      ComplexMatrix h = assemble_hamiltonian(random_spec(rng, n));
      if (options.inject_non_hermitian && trial == 7) h(0, 1) += Complex(0.0, 1e-3);
      const double defect = hermiticity_defect(h);
      require(defect < 1e-12, "assembled Hamiltonian defect " + fmt(defect) + " >= 1e-12");
    }
  });

  suite.check("evolution unitarity", [&] {
    Rng rng(102);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 3);
      const HamiltonianSpec spec = random_spec(rng, n);
      const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(spec), rng.uniform(-2.0, 2.0));
      const double defect = unitarity_defect(u);
      require(defect < 1e-10, "U†U defect " + fmt(defect) + " >= 1e-10");
    }
  });

  suite.check("evolution group property", [&] {
    Rng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 2);
      const ComplexMatrix h = assemble_hamiltonian(random_spec(rng, n));
      const double t1 = rng.uniform(-1.5, 1.5);
      const double t2 = rng.uniform(-1.5, 1.5);
      const double diff =
          max_abs(evolve_unitary(h, t1) * evolve_unitary(h, t2) - evolve_unitary(h, t1 + t2));
      require(diff < 1e-9, "U(t1)U(t2) vs U(t1+t2) differ by " + fmt(diff));
    }
  });

  suite.check("lambda zero erases enhancement", [&] {
    Rng rng(104);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 3);
      HamiltonianSpec with_v = random_spec(rng, n);
      with_v.lambda = 0.0;
      HamiltonianSpec base_only = with_v;
      base_only.enhancement_terms.clear();
      const ComplexMatrix a = assemble_hamiltonian(with_v);
      const ComplexMatrix b = assemble_hamiltonian(base_only);
      require(a == b, "lambda=0 assembly is not bitwise identical to base terms");
    }
  });

  suite.check("conjugate preserves state invariants and spectrum", [&] {
    Rng rng(105);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 2);
      const Eigen::Index dim = Eigen::Index(1) << n;
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(random_spec(rng, n)), 1.0);
      const DensityMatrix sigma = conjugate(u, rho);  // construction re-checks the invariants
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> before(rho.matrix(), Eigen::EigenvaluesOnly);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> after(sigma.matrix(), Eigen::EigenvaluesOnly);
      const double drift = (before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff();
      require(drift < 1e-9, "conjugation moved the spectrum by " + fmt(drift));
    }
  });

  suite.check("trace distance axioms and unitary invariance", [&] {
    Rng rng(106);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 2);
      const Eigen::Index dim = Eigen::Index(1) << n;
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const DensityMatrix sigma = random_density_matrix(rng, dim);
      const DensityMatrix tau = random_density_matrix(rng, dim);
      require(std::abs(trace_distance(rho, sigma) - trace_distance(sigma, rho)) < 1e-9,
              "trace distance is not symmetric");
      require(trace_distance(rho, rho) < 1e-9, "trace_distance(rho, rho) != 0");
      require(trace_distance(rho, tau) <=
                  trace_distance(rho, sigma) + trace_distance(sigma, tau) + 1e-9,
              "triangle inequality violated");
      const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(random_spec(rng, n)), 1.0);
      const double shift =
          std::abs(trace_distance(conjugate(u, rho), conjugate(u, sigma)) - trace_distance(rho, sigma));
      require(shift < 1e-9, "trace distance not unitarily invariant (moved " + fmt(shift) + ")");
    }
  });

  suite.check("fidelity symmetry and trace-distance bounds", [&] {
    Rng rng(107);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 3);
      const Eigen::Index dim = Eigen::Index(1) << n;
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const DensityMatrix sigma = random_density_matrix(rng, dim);
      const double f = fidelity(rho, sigma);
      const double f_swapped = fidelity(sigma, rho);
      require(std::abs(f - f_swapped) < 1e-9, "fidelity is not symmetric");
      const double t = trace_distance(rho, sigma);
      // Fuchs–van de Graaf, with the squared-overlap fidelity
      require(1.0 - std::sqrt(f) <= t + 1e-9, "lower fidelity bound violated");
      require(t <= std::sqrt(1.0 - f) + 1e-9, "upper fidelity bound violated");
      if (n == 1) {
        // the stronger linear lower bound holds on a single qubit
        require(1.0 - f <= t + 1e-9, "qubit linear lower bound violated");
      }
    }
  });

  suite.check("encoding round trip", [&] {
    Rng rng(108);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 3);
      const ProbabilityVector p = random_distribution(rng, std::size_t(1) << n);
      const DensityMatrix rho = encode_distribution(p);  // construction checks state invariants
      const ProbabilityVector back = measure_probabilities(rho);
      const double diff = max_abs_vec_diff(p.probs(), back.probs());
      require(diff < 1e-12, "measure(encode(p)) differs from p by " + fmt(diff));
      double purity = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) purity += p[i] * p[i];
      const double purity_diff = std::abs((rho.matrix() * rho.matrix()).trace().real() - purity);
      require(purity_diff < 1e-12, "purity differs from sum p_i^2 by " + fmt(purity_diff));
    }
  });

  suite.check("empirical distribution permutation invariance", [&] {
    Rng rng(109);
    std::vector<std::uint64_t> samples;
    for (int i = 0; i < 500; ++i) samples.push_back(rng.next_bits() % 4);
    const ProbabilityVector forward = empirical_distribution(samples, 2);
    for (std::size_t i = samples.size(); i > 1; --i) {
      std::swap(samples[i - 1], samples[rng.next_bits() % i]);
    }
    const ProbabilityVector shuffled = empirical_distribution(samples, 2);
    require(forward.probs() == shuffled.probs(), "histogram depends on sample order");
  });

  suite.check("generated states are valid density matrices", [&] {
    Rng rng(110);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 2);
      GeneratorModel g = make_generator(n, default_ansatz(n), rng.uniform(0.0, 1.0));
      std::vector<double> theta(g.spec.base_terms.size());
      for (double& v : theta) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
      set_parameters(g.spec, theta);
      generate(g);  // DensityMatrix construction enforces the invariants
    }
  });

  suite.check("discriminator affine in the state", [&] {
    Rng rng(111);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng.next_bits() % 2);
      const Eigen::Index dim = Eigen::Index(1) << n;
      DiscriminatorModel d = make_discriminator(n, default_ansatz(n), 0.0);
      std::vector<double> theta(d.spec.base_terms.size());
      for (double& v : theta) v = rng.uniform(-1.0, 1.0);
      set_parameters(d.spec, theta);
      const DensityMatrix rho = random_density_matrix(rng, dim);
      const DensityMatrix sigma = random_density_matrix(rng, dim);
      const double alpha = rng.uniform(0.0, 1.0);
      const DensityMatrix mix(alpha * rho.matrix() + (1.0 - alpha) * sigma.matrix());
      const double lhs = discriminate(d, mix);
      const double rhs = alpha * discriminate(d, rho) + (1.0 - alpha) * discriminate(d, sigma);
      require(std::abs(lhs - rhs) < 1e-9, "affinity violated by " + fmt(std::abs(lhs - rhs)));
    }
  });

  suite.check("lambda zero ablation leaves generator output unchanged", [&] {
    Rng rng(112);
    GeneratorModel with_v = make_generator(2, default_ansatz(2), 0.0);
    std::vector<double> theta(with_v.spec.base_terms.size());
    for (double& v : theta) v = rng.uniform(-1.0, 1.0);
    set_parameters(with_v.spec, theta);
    GeneratorModel without_v = with_v;
    without_v.spec.enhancement_terms.clear();
    require(generate(with_v).matrix() == generate(without_v).matrix(),
            "enhancement terms changed output bits at lambda = 0");
  });

  suite.check("literal objective at identity unitaries", [&] {
    Rng rng(113);
    for (int n = 1; n <= 2; ++n) {
      const Eigen::Index dim = Eigen::Index(1) << n;
      GeneratorModel g = make_generator(n, default_ansatz(n), 0.0);
      DiscriminatorModel d = make_discriminator(n, default_ansatz(n), 0.0);
      const DensityMatrix rho_r = random_density_matrix(rng, dim);
      const double value = objective_literal(rho_r, g, d);
      require(std::abs(value - 2.0) < 1e-9, "objective at identity is " + fmt(value) + ", not 2");
    }
  });

  suite.check("finite differences exact on quadratics", [&] {
    auto quadratic = [](const std::vector<double>& theta) {
      double s = 0.0;
      for (double v : theta) s += v * v;
      return s;
    };
    const std::vector<double> grad = fd_gradient(quadratic, {1.0, 2.0}, 1e-4);
    require(std::abs(grad[0] - 2.0) < 1e-6 && std::abs(grad[1] - 4.0) < 1e-6,
            "quadratic gradient off: (" + fmt(grad[0]) + ", " + fmt(grad[1]) + ")");
    const std::vector<double> zero = fd_gradient([](const std::vector<double>&) { return 3.5; },
                                                 {0.3, -0.7, 1.1}, 1e-4);
    require(max_abs_vec(zero) == 0.0, "constant function has nonzero gradient");
  });

  suite.check("training determinism", [&] {
    const TrainingConfig config = short_training_config();
    const ProbabilityVector target({0.75, 0.25});
    const TrainingResult a = train(config, target);
    const TrainingResult b = train(config, target);
    require(histories_identical(a.history, b.history), "identical seeds gave different histories");
    require(a.final_generated == b.final_generated, "identical seeds gave different final states");
  });

  suite.check("training losses stay finite", [&] {
    const TrainingConfig config = short_training_config();
    const TrainingResult result = train(config, ProbabilityVector({0.75, 0.25}));
    require(result.error.empty(), "training aborted: " + result.error);
    for (const IterationRecord& r : result.history) {
      require(std::isfinite(r.loss_g) && std::isfinite(r.loss_d), "non-finite loss recorded");
    }
  });

  suite.check("softmax distribution and shift invariance", [&] {
    Rng rng(114);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> phi(4);
      for (double& v : phi) v = rng.uniform(-3.0, 3.0);
      const ProbabilityVector p = classical_generator_probs(phi);
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) sum += p[i];
      require(std::abs(sum - 1.0) < 1e-12, "softmax sums to " + fmt(sum));
      const double shift = rng.uniform(-5.0, 5.0);
      std::vector<double> shifted = phi;
      for (double& v : shifted) v += shift;
      const double diff = max_abs_vec_diff(p.probs(), classical_generator_probs(shifted).probs());
      require(diff < 1e-12, "softmax not shift invariant (moved " + fmt(diff) + ")");
    }
  });

  suite.check("classical analytic gradients match finite differences", [&] {
    Rng rng(115);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = trial % 2 == 0 ? 2 : 4;
      ClassicalGanModel m;
      m.generator_logits.resize(n);
      m.discriminator_weights.resize(n + 1);
      for (double& v : m.generator_logits) v = rng.uniform(-1.0, 1.0);
      for (double& v : m.discriminator_weights) v = rng.uniform(-1.0, 1.0);
      const ProbabilityVector target = random_distribution(rng, n);

      const std::vector<double> analytic_g = classical_generator_grad(m);
      const std::vector<double> fd_g = fd_gradient(
          [&](const std::vector<double>& phi) {
            ClassicalGanModel probe = m;
            probe.generator_logits = phi;
            return classical_loss_generator(probe);
          },
          m.generator_logits, 1e-5);
      const double rel_g = max_abs_vec_diff(analytic_g, fd_g) /
                           std::max({max_abs_vec(analytic_g), max_abs_vec(fd_g), 1e-9});
      require(rel_g < 1e-5, "generator gradient relative error " + fmt(rel_g));

      const std::vector<double> analytic_d = classical_discriminator_grad(m, target);
      const std::vector<double> fd_d = fd_gradient(
          [&](const std::vector<double>& w) {
            ClassicalGanModel probe = m;
            probe.discriminator_weights = w;
            return classical_loss_discriminator(probe, target);
          },
          m.discriminator_weights, 1e-5);
      const double rel_d = max_abs_vec_diff(analytic_d, fd_d) /
                           std::max({max_abs_vec(analytic_d), max_abs_vec(fd_d), 1e-9});
      require(rel_d < 1e-5, "discriminator gradient relative error " + fmt(rel_d));
    }
  });

  suite.check("classical training determinism", [&] {
    TrainingConfig config = short_training_config();
    config.max_iterations = 60;
    const ProbabilityVector target({0.75, 0.25});
    const TrainingResult a = train_classical(config, target);
    const TrainingResult b = train_classical(config, target);
    require(histories_identical(a.history, b.history), "identical seeds gave different histories");
  });

  suite.check("total variation metric axioms", [&] {
    Rng rng(116);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = trial % 2 == 0 ? 2 : 4;
      const ProbabilityVector p = random_distribution(rng, n);
      const ProbabilityVector q = random_distribution(rng, n);
      const ProbabilityVector r = random_distribution(rng, n);
      require(tv_distance(p, p) == 0.0, "tv(p, p) != 0");
      require(std::abs(tv_distance(p, q) - tv_distance(q, p)) < 1e-12, "tv not symmetric");
      require(tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-12,
              "tv triangle inequality violated");
    }
  });

  suite.check("kl divergence nonnegative", [&] {
    Rng rng(117);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = trial % 2 == 0 ? 2 : 8;
      const ProbabilityVector p = random_distribution(rng, n);
      const ProbabilityVector q = random_distribution(rng, n);
      require(kl_divergence(p, q) >= -1e-12, "KL went negative");
    }
  });

  suite.check("tv equals trace distance on encodings", [&] {
    Rng rng(118);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = trial % 2 == 0 ? 2 : 4;
      const ProbabilityVector p = random_distribution(rng, n);
      const ProbabilityVector q = random_distribution(rng, n);
      const double diff =
          std::abs(tv_distance(p, q) - trace_distance(encode_distribution(p), encode_distribution(q)));
      require(diff < 1e-10, "tv vs trace distance differ by " + fmt(diff));
    }
  });

  suite.check("history csv round trip", [&] {
    Rng rng(119);
    std::vector<IterationRecord> history;
    for (int i = 1; i <= 25; ++i) {
      history.push_back({i, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(0.0, 1.0),
                         rng.uniform(0.0, 1.0), rng.uniform(0.0, 10.0)});
    }
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "qganlab_validate_roundtrip.csv";
    write_history_csv(path, history);
    const std::vector<IterationRecord> back = read_history_csv(path);
    std::filesystem::remove(path);
    require(back.size() == history.size(), "row count changed in round trip");
    for (std::size_t i = 0; i < history.size(); ++i) {
      require(back[i].iteration == history[i].iteration && back[i].loss_g == history[i].loss_g &&
                  back[i].loss_d == history[i].loss_d &&
                  back[i].tv_to_target == history[i].tv_to_target &&
                  back[i].fidelity_to_target == history[i].fidelity_to_target &&
                  back[i].wall_time_ms == history[i].wall_time_ms,
              "row " + std::to_string(i) + " did not round trip exactly");
    }
  });

  suite.check("exponential matches Taylor oracle", [&] {
    Rng rng(120);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, 8, 5.0);
      const double diff = max_abs(evolve_unitary(h, 1.0) - taylor_exponential(h, 1.0, 40));
      require(diff < 1e-8, "eigendecomposition vs Taylor differ by " + fmt(diff));
    }
  });

  suite.check("trained discriminator matches grid-search oracle", [&] {
    const DensityMatrix rho_r = encode_distribution(ProbabilityVector({0.75, 0.25}));
    const DensityMatrix rho_g = encode_distribution(ProbabilityVector({0.25, 0.75}));
    const std::vector<PauliString> ansatz = {PauliString("X"), PauliString("Z")};
    const GridSearchResult oracle = grid_search_discriminator(rho_r, rho_g, ansatz, 101);
    DiscriminatorModel d = make_discriminator(1, ansatz, 0.0);
    Rng rng(121);
    set_parameters(d.spec, {rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)});
    const double trained = train_discriminator(rho_r, rho_g, d, 0.05, 1e-4, 1500);
    require(oracle.best_objective - trained <= 0.05,
            "trained objective " + fmt(trained) + " trails grid optimum " +
                fmt(oracle.best_objective) + " by more than 0.05");
  });

  return suite.results;
}

int validate(std::ostream& out, const ValidationOptions& options) {
  const std::vector<CheckResult> results = run_validation_suite(options);
  int failures = 0;
  for (const CheckResult& r : results) {
    if (r.passed) {
      out << "[PASS] " << r.name << "\n";
    } else {
      out << "[FAIL] " << r.name << ": " << r.detail << "\n";
      ++failures;
    }
  }
  out << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace qgan
