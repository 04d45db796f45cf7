#include "qganlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qganlab/errors.hpp"
#include "qganlab/pauli.hpp"

namespace qgan {

namespace {

bool is_exactly_diagonal(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed to converge");
  return solver.eigenvalues();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw DimensionError("density matrix must be a nonempty square matrix");
  }
  if (!all_finite(matrix_)) throw NumericError("density matrix has non-finite entries");
  const double herm = hermiticity_defect(matrix_);
  if (herm >= kHermitianTol) {
    throw SpecError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) >= kTraceTol) {
    throw SpecError("density matrix trace " + std::to_string(tr) + " is not 1 within 1e-10");
  }
  if (is_exactly_diagonal(matrix_)) {
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
      if (matrix_(i, i).real() < -kPsdTol) {
        throw SpecError("density matrix has negative diagonal entry " +
                        std::to_string(matrix_(i, i).real()));
      }
    }
  } else {
    const Eigen::VectorXd eigs = hermitian_eigenvalues(matrix_);
    if (eigs.minCoeff() < -kPsdTol) {
      throw SpecError("density matrix has negative eigenvalue " + std::to_string(eigs.minCoeff()));
    }
  }
}

DensityMatrix DensityMatrix::computational_basis_state(int n_qubits, Eigen::Index index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix conjugate(const ComplexMatrix& unitary, const DensityMatrix& rho) {
  if (unitary.rows() != unitary.cols() || unitary.rows() != rho.dim()) {
    throw DimensionError("unitary and state dimensions do not match");
  }
  const double defect = unitarity_defect(unitary);
  if (defect >= kUnitaryTol) {
    throw SpecError("conjugate requires a unitary matrix (defect " + std::to_string(defect) + ")");
  }
  return DensityMatrix(unitary * rho.matrix() * unitary.adjoint());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("trace_distance: dimension mismatch");
  const Eigen::VectorXd eigs = hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) sum += std::abs(eigs(i));
  return std::min(0.5 * sum, 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed to converge");
  Eigen::VectorXd w = solver.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -kPsdTol) {
      throw NumericError("fidelity: eigenvalue " + std::to_string(w(i)) + " below -1e-10");
    }
    w(i) = std::sqrt(std::max(w(i), 0.0));
  }
  const ComplexMatrix& v = solver.eigenvectors();
  const ComplexMatrix sqrt_rho = v * w.asDiagonal() * v.adjoint();
  const Eigen::VectorXd inner = hermitian_eigenvalues(sqrt_rho * sigma.matrix() * sqrt_rho);
  double trace_sqrt = 0.0;
  for (Eigen::Index i = 0; i < inner.size(); ++i) {
    if (inner(i) < -1e-9) {
      throw NumericError("fidelity: inner eigenvalue " + std::to_string(inner(i)) + " below -1e-9");
    }
    trace_sqrt += std::sqrt(std::max(inner(i), 0.0));
  }
  return std::min(trace_sqrt * trace_sqrt, 1.0);
}

ProbabilityVector measure_probabilities(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    p[static_cast<std::size_t>(i)] = std::max(rho.matrix()(i, i).real(), 0.0);
    sum += p[static_cast<std::size_t>(i)];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw NumericError("measured probabilities sum to " + std::to_string(sum) +
                       ", expected 1 within 1e-9");
  }
  for (double& v : p) v /= sum;
  return ProbabilityVector(std::move(p));
}

}  // namespace qgan
