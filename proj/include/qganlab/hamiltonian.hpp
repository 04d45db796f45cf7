#pragma once

#include <vector>

#include "qganlab/linalg.hpp"
#include "qganlab/pauli.hpp"

namespace qgan {

struct WeightedPauli {
  double coefficient;
  PauliString op;
};

/** A Hamiltonian of the form  H = sum_k theta_k P_k + lambda * sum_j c_j Q_j.
 *
 *  The base terms carry the trainable coefficients theta; the enhancement
 *  terms form the fixed operator V whose overall weight is lambda. */
struct HamiltonianSpec {
  int n_qubits = 1;
  std::vector<WeightedPauli> base_terms;
  std::vector<WeightedPauli> enhancement_terms;
  double lambda = 0.0;
  double evolution_time = 1.0;
};

/// Read the trainable coefficients, in base-term order.
std::vector<double> get_parameters(const HamiltonianSpec& spec);

/// Overwrite the trainable coefficients, in base-term order.
void set_parameters(HamiltonianSpec& spec, const std::vector<double>& theta);

/** Dense matrix of H + lambda*V. Enhancement terms are skipped entirely when
 *  lambda == 0 so that the result is bitwise identical to the base
 *  Hamiltonian alone. */
ComplexMatrix assemble_hamiltonian(const HamiltonianSpec& spec);

/** e^{-iHt} for Hermitian H, via eigendecomposition H = V diag(w) V†. */
ComplexMatrix evolve_unitary(const ComplexMatrix& hamiltonian, double t);

}  // namespace qgan
