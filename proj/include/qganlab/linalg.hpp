#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qgan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/** Largest entrywise modulus, max_ij |a_ij|. */
double max_abs(const ComplexMatrix& a);

/** max_ij |a_ij - conj(a_ji)|; zero iff the matrix is Hermitian. */
double hermiticity_defect(const ComplexMatrix& a);

/** max |U†U - I|; zero iff the matrix is unitary. */
double unitarity_defect(const ComplexMatrix& u);

bool all_finite(const ComplexMatrix& a);

/** Kronecker product, left operand on the slow (most significant) index. */
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qgan
