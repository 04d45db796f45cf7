#pragma once

#include <string>
#include <vector>

#include "qganlab/encoding.hpp"
#include "qganlab/hamiltonian.hpp"
#include "qganlab/state.hpp"

namespace qgan {

/** Quantum generator: evolves the fixed initial state under the trainable
 *  Hamiltonian, U_G = e^{-i(H_G + lambda V_G)t}. */
struct GeneratorModel {
  HamiltonianSpec spec;
  DensityMatrix initial_state;
};

/** Quantum discriminator: evolves its input under U_D = e^{-i(H_D + lambda V_D)t}
 *  and reads out the projector expectation Tr(M U rho U†). */
struct DiscriminatorModel {
  HamiltonianSpec spec;
  ComplexMatrix readout_projector;
};

/** Per qubit {X_q, Z_q}, plus Z_q Z_{q+1} on nearest-neighbor pairs. */
std::vector<PauliString> default_ansatz(int n_qubits);

/** Entangling enhancement V = sum over pairs q<q' of (X_q X_q' + Y_q Y_q');
 *  empty on a single qubit. */
std::vector<WeightedPauli> default_enhancement(int n_qubits);

/** "default", or a comma-separated list of Pauli strings, each of length
 *  n_qubits ("X,Y,Z" on one qubit, "XI,IX,ZZ" on two). */
std::vector<PauliString> parse_ansatz(const std::string& ansatz, int n_qubits);

/** Projector onto qubit 0 = |0>, i.e. |0><0| ⊗ I (qubit 0 leftmost). */
ComplexMatrix qubit0_projector(int n_qubits);

/** Generator with theta = 0, initial state |0...0><0...0|, and the default
 *  enhancement operator. */
GeneratorModel make_generator(int n_qubits, std::vector<PauliString> ansatz, double lambda,
                              double evolution_time = 1.0);
DiscriminatorModel make_discriminator(int n_qubits, std::vector<PauliString> ansatz, double lambda,
                                      double evolution_time = 1.0);

/** rho_g = U_G rho_0 U_G†. */
DensityMatrix generate(const GeneratorModel& g);

/** The generated state's data representation: the computational-basis
 *  distribution of generate(g), re-encoded as a diagonal density matrix.
 *  This is what the discriminator scores in probabilistic mode — the
 *  discriminator sees generated data, not the generator's internal
 *  coherences. */
DensityMatrix generated_data_state(const GeneratorModel& g);

/** D(rho) = Tr(M U_D rho U_D†), clamped to [0, 1]. */
double discriminate(const DiscriminatorModel& d, const DensityMatrix& rho);

/** The trace-form minimax objective, as printed:
 *  Re Tr(rho_r U_D) + Re Tr(rho_g U_G U_D) with rho_g = generate(g). */
double objective_literal(const DensityMatrix& rho_r, const GeneratorModel& g,
                         const DiscriminatorModel& d);

/// Score clamp bounds applied before taking logs.
inline constexpr double kScoreClampLo = 1e-9;
inline constexpr double kScoreClampHi = 1.0 - 1e-9;

/** -[log D(rho_r) + log(1 - D(rho_g))] with clamped scores; rho_g is the
 *  generated data state. */
double loss_discriminator(const DensityMatrix& rho_r, const GeneratorModel& g,
                          const DiscriminatorModel& d);

/** Non-saturating generator loss -log D(rho_g), clamped. */
double loss_generator(const GeneratorModel& g, const DiscriminatorModel& d);

/** log D(rho_r) + log(1 - D(rho_g)) on explicit states; the quantity the
 *  discriminator ascends and the grid-search oracle scans. */
double discriminator_objective(const DiscriminatorModel& d, const DensityMatrix& rho_r,
                               const DensityMatrix& rho_g);

}  // namespace qgan
