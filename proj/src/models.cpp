#include "qganlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qganlab/errors.hpp"

namespace qgan {

std::vector<PauliString> default_ansatz(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  std::vector<PauliString> terms;
  auto single = [&](int q, Pauli p) {
    std::vector<Pauli> ops(static_cast<std::size_t>(n_qubits), Pauli::I);
    ops[static_cast<std::size_t>(q)] = p;
    return PauliString(std::move(ops));
  };
  for (int q = 0; q < n_qubits; ++q) terms.push_back(single(q, Pauli::X));
  for (int q = 0; q < n_qubits; ++q) terms.push_back(single(q, Pauli::Z));
  for (int q = 0; q + 1 < n_qubits; ++q) {
    std::vector<Pauli> ops(static_cast<std::size_t>(n_qubits), Pauli::I);
    ops[static_cast<std::size_t>(q)] = Pauli::Z;
    ops[static_cast<std::size_t>(q + 1)] = Pauli::Z;
    terms.push_back(PauliString(std::move(ops)));
  }
  return terms;
}

std::vector<WeightedPauli> default_enhancement(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  std::vector<WeightedPauli> terms;
  for (int q = 0; q < n_qubits; ++q) {
    for (int r = q + 1; r < n_qubits; ++r) {
      for (Pauli p : {Pauli::X, Pauli::Y}) {
        std::vector<Pauli> ops(static_cast<std::size_t>(n_qubits), Pauli::I);
        ops[static_cast<std::size_t>(q)] = p;
        ops[static_cast<std::size_t>(r)] = p;
        terms.push_back({1.0, PauliString(std::move(ops))});
      }
    }
  }
  return terms;
}

std::vector<PauliString> parse_ansatz(const std::string& ansatz, int n_qubits) {
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t");
    const auto end = s.find_last_not_of(" \t");
    if (begin == std::string::npos) return std::string();
    return s.substr(begin, end - begin + 1);
  };
  const std::string trimmed = trim(ansatz);
  if (trimmed.empty()) throw SpecError("ansatz is empty");
  if (trimmed == "default") return default_ansatz(n_qubits);
  std::vector<PauliString> terms;
  std::stringstream ss(trimmed);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) throw SpecError("ansatz has an empty term");
    PauliString p(token);
    if (p.n_qubits() != n_qubits) {
      throw SpecError("ansatz term '" + token + "' acts on " + std::to_string(p.n_qubits()) +
                      " qubit(s), expected " + std::to_string(n_qubits));
    }
    terms.push_back(std::move(p));
  }
  return terms;
}

ComplexMatrix qubit0_projector(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  // qubit 0 is the most significant index bit
  for (Eigen::Index i = 0; i < dim / 2; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

HamiltonianSpec make_spec(int n_qubits, std::vector<PauliString> ansatz, double lambda,
                          double evolution_time) {
  HamiltonianSpec spec;
  spec.n_qubits = n_qubits;
  spec.base_terms.reserve(ansatz.size());
  for (auto& p : ansatz) spec.base_terms.push_back({0.0, std::move(p)});
  spec.enhancement_terms = default_enhancement(n_qubits);
  spec.lambda = lambda;
  spec.evolution_time = evolution_time;
  return spec;
}

}  // namespace

GeneratorModel make_generator(int n_qubits, std::vector<PauliString> ansatz, double lambda,
                              double evolution_time) {
  return GeneratorModel{make_spec(n_qubits, std::move(ansatz), lambda, evolution_time),
                        DensityMatrix::computational_basis_state(n_qubits, 0)};
}

DiscriminatorModel make_discriminator(int n_qubits, std::vector<PauliString> ansatz, double lambda,
                                      double evolution_time) {
  return DiscriminatorModel{make_spec(n_qubits, std::move(ansatz), lambda, evolution_time),
                            qubit0_projector(n_qubits)};
}

DensityMatrix generate(const GeneratorModel& g) {
  const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(g.spec), g.spec.evolution_time);
  return conjugate(u, g.initial_state);
}

DensityMatrix generated_data_state(const GeneratorModel& g) {
  return encode_distribution(measure_probabilities(generate(g)));
}

double discriminate(const DiscriminatorModel& d, const DensityMatrix& rho) {
  const Eigen::Index dim = Eigen::Index(1) << d.spec.n_qubits;
  if (rho.dim() != dim) throw DimensionError("discriminate: state dimension mismatch");
  const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(d.spec), d.spec.evolution_time);
  const double score = (d.readout_projector * u * rho.matrix() * u.adjoint()).trace().real();
  return std::clamp(score, 0.0, 1.0);
}

double objective_literal(const DensityMatrix& rho_r, const GeneratorModel& g,
                         const DiscriminatorModel& d) {
  const Eigen::Index dim = Eigen::Index(1) << d.spec.n_qubits;
  if (rho_r.dim() != dim || g.initial_state.dim() != dim) {
    throw DimensionError("objective_literal: dimension mismatch");
  }
  const ComplexMatrix u_g = evolve_unitary(assemble_hamiltonian(g.spec), g.spec.evolution_time);
  const ComplexMatrix u_d = evolve_unitary(assemble_hamiltonian(d.spec), d.spec.evolution_time);
  const DensityMatrix rho_g = generate(g);
  // as printed: the second trace applies U_G to the already generated state
  return (rho_r.matrix() * u_d).trace().real() + (rho_g.matrix() * u_g * u_d).trace().real();
}

namespace {

double clamp_score(double s) { return std::clamp(s, kScoreClampLo, kScoreClampHi); }

}  // namespace

double discriminator_objective(const DiscriminatorModel& d, const DensityMatrix& rho_r,
                               const DensityMatrix& rho_g) {
  return std::log(clamp_score(discriminate(d, rho_r))) +
         std::log(1.0 - clamp_score(discriminate(d, rho_g)));
}

double loss_discriminator(const DensityMatrix& rho_r, const GeneratorModel& g,
                          const DiscriminatorModel& d) {
  return -discriminator_objective(d, rho_r, generated_data_state(g));
}

double loss_generator(const GeneratorModel& g, const DiscriminatorModel& d) {
  return -std::log(clamp_score(discriminate(d, generated_data_state(g))));
}

}  // namespace qgan
