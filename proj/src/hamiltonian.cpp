#include "qganlab/hamiltonian.hpp"

#include <cmath>

#include "qganlab/errors.hpp"

namespace qgan {

std::vector<double> get_parameters(const HamiltonianSpec& spec) {
  std::vector<double> theta;
  theta.reserve(spec.base_terms.size());
  for (const auto& term : spec.base_terms) theta.push_back(term.coefficient);
  return theta;
}

void set_parameters(HamiltonianSpec& spec, const std::vector<double>& theta) {
  if (theta.size() != spec.base_terms.size()) {
    throw SpecError("parameter vector length " + std::to_string(theta.size()) +
                    " does not match base term count " + std::to_string(spec.base_terms.size()));
  }
  for (std::size_t k = 0; k < theta.size(); ++k) spec.base_terms[k].coefficient = theta[k];
}

ComplexMatrix assemble_hamiltonian(const HamiltonianSpec& spec) {
  if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits " + std::to_string(spec.n_qubits) + " outside supported range [1, " +
                         std::to_string(kMaxQubits) + "]");
  }
  if (spec.lambda < 0.0 || !std::isfinite(spec.lambda)) {
    throw SpecError("lambda must be finite and >= 0");
  }
  const Eigen::Index dim = Eigen::Index(1) << spec.n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  auto add_terms = [&](const std::vector<WeightedPauli>& terms, double scale, const char* which) {
    for (const auto& term : terms) {
      if (term.op.n_qubits() != spec.n_qubits) {
        throw SpecError(std::string(which) + " term '" + term.op.str() + "' acts on " +
                        std::to_string(term.op.n_qubits()) + " qubits, spec has " +
                        std::to_string(spec.n_qubits));
      }
      if (!std::isfinite(term.coefficient)) {
        throw SpecError(std::string(which) + " term '" + term.op.str() + "' has non-finite coefficient");
      }
      h += (scale * term.coefficient) * pauli_matrix(term.op);
    }
  };
  add_terms(spec.base_terms, 1.0, "base");
  // skipped entirely at lambda == 0 so the result is bitwise identical to
  // the base Hamiltonian alone
  if (spec.lambda != 0.0) add_terms(spec.enhancement_terms, spec.lambda, "enhancement");
  return h;
}

ComplexMatrix evolve_unitary(const ComplexMatrix& hamiltonian, double t) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() < 1) {
    throw DimensionError("Hamiltonian must be a nonempty square matrix");
  }
  if (!all_finite(hamiltonian)) throw NumericError("Hamiltonian has non-finite entries");
  if (hermiticity_defect(hamiltonian) >= 1e-10) {
    throw SpecError("evolve_unitary requires a Hermitian matrix (defect >= 1e-10)");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed to converge");
  const Eigen::VectorXd w = solver.eigenvalues();
  const ComplexMatrix& v = solver.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -w(i) * t));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace qgan
