#pragma once

#include "qganlab/linalg.hpp"
#include "qganlab/probability.hpp"

namespace qgan {

/// Construction-time tolerances for quantum-state invariants.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/** Mixed quantum state: Hermitian, unit-trace, positive-semidefinite.
 *
 *  All three invariants are checked on construction. */
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// |index><index| on n qubits.
  static DensityMatrix computational_basis_state(int n_qubits, Eigen::Index index);
  /// I / 2^n.
  static DensityMatrix maximally_mixed(int n_qubits);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/** U rho U†. Requires U unitary within 1e-10 and matching dimensions. */
DensityMatrix conjugate(const ComplexMatrix& unitary, const DensityMatrix& rho);

/** (1/2) sum |eigenvalues of rho - sigma|, in [0, 1]. */
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/** Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, in [0, 1]. */
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/** Computational-basis outcome distribution: the real diagonal, clamped at 0
 *  and renormalized. Fails if the clamped diagonal sums away from 1 by more
 *  than 1e-9. */
ProbabilityVector measure_probabilities(const DensityMatrix& rho);

}  // namespace qgan
