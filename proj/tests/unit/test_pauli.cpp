#include "doctest.h"

#include "qganlab/errors.hpp"
#include "qganlab/pauli.hpp"
#include "qganlab/rng.hpp"

using namespace qgan;

TEST_CASE("single-qubit pauli matrices") {
  const ComplexMatrix id = pauli_matrix(PauliString("I"));
  CHECK(id.rows() == 2);
  CHECK(id(0, 0) == Complex(1, 0));
  CHECK(id(0, 1) == Complex(0, 0));
  CHECK(id(1, 1) == Complex(1, 0));

  const ComplexMatrix z = pauli_matrix(PauliString("Z"));
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
  CHECK(z(0, 1) == Complex(0, 0));
  CHECK(z(1, 0) == Complex(0, 0));
}

TEST_CASE("XX is the 4x4 anti-diagonal") {
  // hand tensor product: X⊗X flips both bits
  const ComplexMatrix xx = pauli_matrix(PauliString("XX"));
  REQUIRE(xx.rows() == 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      CHECK(xx(i, j) == (i + j == 3 ? Complex(1, 0) : Complex(0, 0)));
    }
  }
}

TEST_CASE("qubit 0 is the leftmost factor") {
  // Z on qubit 0 of two: diag(+1, +1, -1, -1) — sign follows the MSB
  const ComplexMatrix zi = pauli_matrix(PauliString("ZI"));
  CHECK(zi(0, 0) == Complex(1, 0));
  CHECK(zi(1, 1) == Complex(1, 0));
  CHECK(zi(2, 2) == Complex(-1, 0));
  CHECK(zi(3, 3) == Complex(-1, 0));
}

TEST_CASE("pauli string validation") {
  CHECK_THROWS_AS(PauliString(""), SpecError);
  CHECK_THROWS_AS(PauliString("XQ"), SpecError);
  CHECK_THROWS_AS(pauli_matrix(PauliString("XXXXXXXXXXX")), DimensionError);  // 11 qubits
  CHECK(PauliString("XIZ").str() == "XIZ");
  CHECK(PauliString::identity(3).str() == "III");
}

TEST_CASE("pauli matrices are hermitian unitary involutions") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Pauli> ops;
    const int n = 1 + static_cast<int>(rng.next_bits() % 3);
    for (int q = 0; q < n; ++q) ops.push_back(static_cast<Pauli>(rng.next_bits() % 4));
    const ComplexMatrix m = pauli_matrix(PauliString(ops));
    CHECK(hermiticity_defect(m) == 0.0);
    CHECK(unitarity_defect(m) < 1e-15);
    CHECK(max_abs(m * m - ComplexMatrix::Identity(m.rows(), m.cols())) == 0.0);
  }
}
